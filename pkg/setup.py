"""
Setup script for treebank_projector package
"""
from setuptools import setup, find_packages
from pathlib import Path

# 读取 README
readme_path = Path(__file__).parent / "README.md"
long_description = readme_path.read_text(encoding="utf-8") if readme_path.exists() else ""

# 读取 requirements(测试依赖除外)
requirements_path = Path(__file__).parent / "requirements.txt"
requirements = []
if requirements_path.exists():
    requirements = [
        line.strip()
        for line in requirements_path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#") and not line.startswith("pytest")
    ]

setup(
    name="treebank_projector",
    version="0.1.0",
    description="依存树库注释投射 - 词对齐 + 最大匹配 + 启发式转移规则,附 UAS/LAS 评测",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["src", "src.*"]),
    py_modules=["main"],
    package_data={"src": ["data/*.tsv"]},
    include_package_data=True,
    install_requires=requirements,
    extras_require={"test": ["pytest>=7.4"]},
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "treebank-projector=main:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Text Processing :: Linguistic",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    keywords="universal dependencies conllu treebank annotation projection word alignment",
)

"""Services 服务层模块"""
from src.services.projection import project_treebank, ProjectionOptions
from src.services.evaluation import score, effort_report
from src.services.analysis import relation_table, render_table

__all__ = [
    'project_treebank',
    'ProjectionOptions',
    'score',
    'effort_report',
    'relation_table',
    'render_table',
]

"""终端颜色 - colorama 不可用时降级为无色输出"""
try:
    from colorama import init, Fore, Style
    init(autoreset=True)
except ImportError:
    class Fore:
        CYAN = YELLOW = GREEN = MAGENTA = RED = BLUE = WHITE = ""

    class Style:
        BRIGHT = RESET_ALL = ""


def header(title: str, width: int = 70) -> str:
    """带分隔线的标题块"""
    line = "=" * width
    return f"{Fore.CYAN}{line}\n{Fore.CYAN}{Style.BRIGHT}{title}\n{Fore.CYAN}{line}"


__all__ = ['Fore', 'Style', 'header']

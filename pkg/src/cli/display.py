"""
Console display helpers for command results.
"""

from typing import Optional

from utils import Colors


def display_results_header(title: str):
    """Display a results header."""
    print(f"\n{Colors.BOLD}{Colors.BRIGHT_CYAN}📊 {title}:{Colors.RESET}")


def display_status_line(label: str, value: str, color: str = Colors.BRIGHT_WHITE):
    """Display a status line with consistent formatting."""
    print(f"{color}{label}: {Colors.BRIGHT_YELLOW}{value}{Colors.RESET}")


def display_boolean_status(label: str, value: bool, count: Optional[int] = None, details: Optional[str] = None):
    """Display boolean status with appropriate colors and symbols."""
    status_color = Colors.BRIGHT_GREEN if value else Colors.BRIGHT_RED
    status_symbol = "✅" if value else "❌"
    count_text = f" ({count})" if count is not None else ""
    details_text = f" ({details})" if details else ""
    print(f"{Colors.BRIGHT_WHITE}{label}: {status_color}{status_symbol}{Colors.RESET}{count_text}{details_text}")


def display_matrix(title: str, rows, labels=None):
    """Display a small matrix of p/q strings, one labelled row per line."""
    print(f"\n{Colors.BOLD}{Colors.BRIGHT_MAGENTA}{title}:{Colors.RESET}")
    print(f"{Colors.DIM}{'─' * 60}{Colors.RESET}")
    for k, row in enumerate(rows):
        label = labels[k] if labels else str(k)
        cells = "  ".join(f"{cell:>8}" for cell in row)
        print(f"   {Colors.BRIGHT_BLUE}{label:>6}{Colors.RESET}  {cells}")
    print(f"{Colors.DIM}{'─' * 60}{Colors.RESET}")


def display_success_message(message: str):
    print(f"\n{Colors.BOLD}{Colors.BRIGHT_GREEN}{'=' * 60}{Colors.RESET}")
    print(f"{Colors.BOLD}{Colors.BRIGHT_GREEN}✅ {message}{Colors.RESET}")
    print(f"{Colors.BOLD}{Colors.BRIGHT_GREEN}{'=' * 60}{Colors.RESET}")


def display_failure_message(message: str):
    print(f"\n{Colors.BOLD}{Colors.BRIGHT_RED}❌ {message}{Colors.RESET}")

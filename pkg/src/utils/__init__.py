"""
Utilities package for gptkit.
"""

from .logging import (
    setup_colored_logging,
    log_section_header,
    log_workflow_step,
    log_report,
    Colors
)

__all__ = [
    "setup_colored_logging",
    "log_section_header",
    "log_workflow_step",
    "log_report",
    "Colors",
]

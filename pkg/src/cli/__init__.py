"""
Command-line interface for gptkit.
"""

from .commands import COMMANDS, cmd_analyze, cmd_chsh, cmd_compose, cmd_export, cmd_reduce

__all__ = ["COMMANDS", "cmd_analyze", "cmd_chsh", "cmd_compose", "cmd_export", "cmd_reduce"]

from .main import main, run_command
from .parser import ParseError, lower, parse_expr, to_source

__all__ = ["main", "run_command", "ParseError", "lower", "parse_expr", "to_source"]

from .parser import ProblemFile, Query, emit_problem, parse_degree, parse_polynomial, parse_problem

__all__ = ["ProblemFile", "Query", "emit_problem", "parse_degree", "parse_polynomial", "parse_problem"]

"""Query language front end: parser, evaluator, storage, session and CLI."""
from .ast import expr_text, query_text
from .evaluator import Evaluator, eval_condition, eval_select, eval_union_query
from .parser import parse_condition, parse_query, parse_statement, parse_tc
from .session import Session
from .storage import Database, SessionConfig, load_directory, load_relation, save_relation

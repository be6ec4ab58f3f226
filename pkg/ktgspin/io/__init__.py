from .ktg_format import KtgDocument, dump, load, parse, parse_document, serialize
from .table_format import load_table, parse_table

__all__ = ["KtgDocument", "dump", "load", "parse", "parse_document", "serialize", "load_table", "parse_table"]

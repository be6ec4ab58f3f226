from .families import available_families, register_family, resolve_family, setup_builtin_families

__all__ = [
    "available_families",
    "register_family",
    "resolve_family",
    "setup_builtin_families",
]

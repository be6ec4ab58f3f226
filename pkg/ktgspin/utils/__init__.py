from .str_utils import natural_key, fresh_id, sorted_ids

__all__ = ["natural_key", "fresh_id", "sorted_ids"]

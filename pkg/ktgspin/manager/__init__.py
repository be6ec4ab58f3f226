from .spin_pool import SpinWorkerPool

__all__ = ["SpinWorkerPool"]

import warnings
from functools import wraps

try:
    from tenacity import Retrying, retry_if_exception_type, stop_after_attempt, wait_fixed
except ImportError:
    warnings.warn("tenacity is not installed. Retry functionality will not be available."
                  " Install it with 'pip3 install tenacity' to enable retry logic.")
    Retrying = None
    retry_if_exception_type = None
    stop_after_attempt = None
    wait_fixed = None


def retry_args(func=None, *, max_attempts=2, wait=1, retry_on=(OSError,)):
    """
    Decorator retrying a function on transient failures.

    Can be used as @retry_args or @retry_args(max_attempts=3, wait=3).
    Callers may override per call with ``max_attempts=`` and ``wait=``
    keyword arguments, which are consumed by the decorator. Only exceptions
    listed in ``retry_on`` trigger a retry; the last one is re-raised.
    """
    def decorator(inner_func):
        @wraps(inner_func)
        def wrapper(*args, **kwargs):
            actual_max_attempts = kwargs.pop("max_attempts", None) or max_attempts
            actual_wait = kwargs.pop("wait", None)
            if actual_wait is None:
                actual_wait = wait

            if Retrying is None:
                return inner_func(*args, **kwargs)

            retryer = Retrying(
                stop=stop_after_attempt(actual_max_attempts),
                wait=wait_fixed(actual_wait),
                retry=retry_if_exception_type(retry_on),
                reraise=True,
            )
            return retryer(inner_func, *args, **kwargs)
        return wrapper

    if func is not None:
        return decorator(func)
    return decorator


def iter_update_dict(dt_base: dict, dt_new: dict) -> dict:
    """
    Recursively update a dictionary with another dictionary.

    Nested dictionaries are merged key by key; any other value in ``dt_new``
    replaces the one in ``dt_base``.

    Args:
        dt_base (dict): The original dictionary, updated in place.
        dt_new (dict): The dictionary with updates.

    Returns:
        dict: The updated dictionary.
    """
    for k, vv in dt_new.items():
        v = dt_base.get(k)
        if isinstance(v, dict) and isinstance(vv, dict):
            dt_base[k] = iter_update_dict(v, vv)
        else:
            dt_base[k] = vv
    return dt_base

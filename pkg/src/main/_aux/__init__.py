from ._aux import retry_args, iter_update_dict

__all__ = [
    'retry_args',
    'iter_update_dict',
]

import json
import math
import re
from io import BytesIO

from upath import UPath

from .csv import FLOAT_FORMAT

_FLOAT_TAG = "\x1ffloat:"
_FLOAT_TOKEN = re.compile(r'"\\u001ffloat:([^"]+)"')


def _tag_floats(obj):
    if isinstance(obj, float):
        return _FLOAT_TAG + FLOAT_FORMAT % obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _tag_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_tag_floats(v) for v in obj]
    return obj


class JsonFileIO:
    """
    JSON with sorted keys and two-space indentation. Finite floats are
    written with 17 significant digits in scientific notation, the same
    format as CSV; non-finite floats become null.
    """

    @staticmethod
    def _read(b: BytesIO, *args, **kwargs) -> object:
        return json.load(b, *args, **kwargs)

    @staticmethod
    def render(data: object) -> str:
        text = json.dumps(_tag_floats(data), sort_keys=True, indent=2, allow_nan=False)
        return _FLOAT_TOKEN.sub(r"\1", text) + "\n"

    @staticmethod
    def _write(upath_obj: UPath, data: object, mode: str = 'w', *args, **kwargs):
        with upath_obj.fs.open(upath_obj.path, mode) as f:
            f.write(JsonFileIO.render(data))

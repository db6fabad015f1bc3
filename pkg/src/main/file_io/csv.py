from io import BytesIO

from pandas import DataFrame, read_csv
from upath import UPath

FLOAT_FORMAT = "%.16e"


class CSVFileIO:
    """
    CSV with fixed-width scientific floats, no index and LF line endings,
    so identical frames always serialize to identical bytes.
    """

    @staticmethod
    def _read(b: BytesIO, *args, **kwargs) -> DataFrame:
        return read_csv(b, *args, **kwargs)

    @staticmethod
    def render(data: DataFrame, **kwargs) -> str:
        options = {"index": False, "float_format": FLOAT_FORMAT, "na_rep": "nan", "lineterminator": "\n"}
        options.update(kwargs)
        return data.to_csv(**options)

    @staticmethod
    def _write(upath_obj: UPath, data: DataFrame, mode: str = 'w', *args, **kwargs):
        with upath_obj.fs.open(upath_obj.path, mode) as f:
            f.write(CSVFileIO.render(data, **kwargs))

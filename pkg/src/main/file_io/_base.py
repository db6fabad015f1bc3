from io import BytesIO
from typing import Optional

from pandas import DataFrame
from upath import UPath

from .csv import CSVFileIO
from .json import JsonFileIO
from .keyvalue import KeyValueFileIO
from .text import TextFileIO
from .yaml import YamlFileIO

fileio_mapping = {
    "csv": CSVFileIO,
    "txt": TextFileIO,
    "text": TextFileIO,
    "log": TextFileIO,
    "json": JsonFileIO,
    "yaml": YamlFileIO,
    "yml": YamlFileIO,
    "cfg": KeyValueFileIO,
    "conf": KeyValueFileIO,
}

_DATAFRAME_FORMATS = {"csv"}
_STR_FORMATS = {"txt", "text", "log"}


class BaseFileIO:
    """
    Extension-dispatched reading and writing on any fsspec filesystem.
    """
    def __init__(self, upath_obj: UPath, *args, **kwargs):
        self.upath = upath_obj
        self.file_extension = self._validate_file_extension()

    def _fexists(self, *args, **kwargs) -> bool:
        return self.upath.exists()

    def _validate_file_extension(self) -> str:
        """
        Returns:
            str: The lowercase extension without the dot.

        Raises:
            ValueError: If the file has no extension or an unsupported one.
        """
        file_extension = self.upath.suffix[1:].lower()
        if not file_extension:
            raise ValueError(f"File {self.upath.path} has no extension")
        if file_extension not in fileio_mapping:
            raise ValueError(f"Unsupported file format: .{file_extension}.\n"
                             f"Supported formats: {list(fileio_mapping.keys())}")
        return file_extension

    def _fread(self, raw_bytes: bool = False, *args, **kwargs) -> object:
        """
        Read and parse the file according to its extension.

        Args:
            raw_bytes (bool): If True, return the undecoded bytes.

        Raises:
            FileNotFoundError: If the file does not exist.
        """
        if not self.upath.exists():
            raise FileNotFoundError(f"File not found: {self.upath.path}")

        with self.upath.fs.open(self.upath.path, 'rb') as f:
            raw_data = f.read()

        if raw_bytes:
            return raw_data
        file_io_cls = fileio_mapping[self.file_extension]
        return file_io_cls._read(BytesIO(raw_data), *args, **kwargs)

    def _fwrite(self, data: object, mode: Optional[str] = None, *args, **kwargs) -> None:
        """
        Serialize ``data`` according to the extension and write it.

        Raises:
            TypeError: If the data type does not fit the format.
        """
        self._validate_data_type(data, self.file_extension)
        parent = self.upath.parent
        if not parent.exists():
            parent.mkdir(parents=True, exist_ok=True)
        file_io_cls = fileio_mapping[self.file_extension]
        return file_io_cls._write(self.upath, data, mode=mode or 'w', *args, **kwargs)

    def _validate_data_type(self, data: object, file_extension: str) -> None:
        if file_extension in _DATAFRAME_FORMATS and not isinstance(data, DataFrame):
            raise TypeError(f"Writing {file_extension.upper()} files requires a pandas DataFrame, got {type(data).__name__}")
        if file_extension in _STR_FORMATS and not isinstance(data, str):
            raise TypeError(f"Writing {file_extension.upper()} files requires a string, got {type(data).__name__}")

from typing import Any, Optional

import fsspec
from upath import UPath

from .._aux import retry_args
from ._base import BaseFileIO, fileio_mapping
from .csv import CSVFileIO
from .json import JsonFileIO
from .keyvalue import KeyValueFileIO


class FileIOInterface:
    """
    Static entry points for file access; paths may be any fsspec URL.

    Every operation retries transient ``OSError`` failures through
    :func:`retry_args`; pass ``max_attempts=`` and ``wait=`` to override.
    """

    @staticmethod
    def _instantiate(fpath: str, filesystem: Optional[str] = None, *args, **kwargs) -> BaseFileIO:
        """
        Raises:
            ValueError: If the filesystem is unsupported or the extension is unknown.
        """
        if filesystem is not None and filesystem not in fsspec.available_protocols():
            raise ValueError(f"Unsupported filesystem: {filesystem}")
        upath_obj: UPath = UPath(fpath, protocol=filesystem) if filesystem else UPath(fpath)
        return BaseFileIO(upath_obj=upath_obj)

    @staticmethod
    @retry_args
    def fexists(fpath: str, filesystem: Optional[str] = None, *args, **kwargs) -> bool:
        fileio: BaseFileIO = __class__._instantiate(fpath=fpath, filesystem=filesystem)
        return fileio._fexists()

    @staticmethod
    @retry_args
    def fread(read_path: str, filesystem: Optional[str] = None, *args, **kwargs) -> Any:
        """
        Read and parse a file.

        Args:
            read_path (str): Path or URL of the file.
            filesystem (Optional[str]): fsspec protocol, if not part of the path.

        Returns:
            Any: DataFrame for csv, parsed object for json/yaml, str for text,
            list of (line, key, value) for cfg/conf.
        """
        fileio: BaseFileIO = __class__._instantiate(fpath=read_path, filesystem=filesystem)
        return fileio._fread(*args, **kwargs)

    @staticmethod
    @retry_args
    def fwrite(write_path: str, data: Any, filesystem: Optional[str] = None, *args, **kwargs) -> None:
        """
        Write data to a file, creating parent directories.

        Args:
            write_path (str): Path or URL of the file.
            data (Any): DataFrame for csv, str for text, serializable data for json/yaml.
            filesystem (Optional[str]): fsspec protocol, if not part of the path.

        Raises:
            TypeError: If the data type does not match the file format.
        """
        fileio: BaseFileIO = __class__._instantiate(fpath=write_path, filesystem=filesystem)
        return fileio._fwrite(data, *args, **kwargs)


__all__ = [
    "BaseFileIO",
    "CSVFileIO",
    "FileIOInterface",
    "JsonFileIO",
    "KeyValueFileIO",
    "fileio_mapping",
]

from io import BytesIO

import yaml
from upath import UPath


class YamlFileIO:
    """
    Class for reading and writing YAML files.
    """

    @staticmethod
    def _read(b: BytesIO, *args, **kwargs) -> object:
        """
        Raises:
            ValueError: If the content is not valid YAML.
        """
        try:
            return yaml.safe_load(b)
        except yaml.YAMLError as e:
            raise ValueError(f"invalid YAML: {e}") from e

    @staticmethod
    def _write(upath_obj: UPath, data: object, mode: str = 'w', *args, **kwargs):
        with upath_obj.fs.open(upath_obj.path, mode) as f:
            yaml.safe_dump(data, f, sort_keys=True, *args, **kwargs)

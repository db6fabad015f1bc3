from io import BytesIO

from upath import UPath

from ..core import ConfigError


class KeyValueFileIO:
    """
    ``key=value`` configuration files: one entry per line, ``#`` starts a
    comment, blank lines are skipped.
    """

    @staticmethod
    def _read(b: BytesIO, *args, **kwargs) -> list[tuple[int, str, str]]:
        """
        Returns:
            list[tuple[int, str, str]]: (line number, key, value) in file order.

        Raises:
            ConfigError: If the file is not UTF-8 or a line has no '=' or an empty key.
        """
        try:
            text = b.read().decode("utf-8")
        except UnicodeDecodeError as e:
            raise ConfigError(f"configuration file is not valid UTF-8: {e}") from e

        entries = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            content = line.split("#", 1)[0].strip()
            if not content:
                continue
            key, sep, value = content.partition("=")
            if not sep or not key.strip():
                raise ConfigError(f"expected 'key=value', got {line.strip()!r}", line=lineno)
            entries.append((lineno, key.strip(), value.strip()))
        return entries

    @staticmethod
    def _write(upath_obj: UPath, data: dict, mode: str = 'w', *args, **kwargs):
        """
        Raises:
            TypeError: If ``data`` is not a mapping.
            ValueError: If an entry would not read back unchanged.
        """
        if not isinstance(data, dict):
            raise TypeError(f"Writing key=value files requires a dict, got {type(data).__name__}")
        lines = []
        for k, v in data.items():
            key, value = str(k).strip(), str(v).strip()
            if not key or any(c in key for c in "=#\n") or any(c in value for c in "#\n"):
                raise ValueError(f"entry {k!r}={v!r} cannot be written as a key=value line")
            lines.append(f"{key}={value}\n")
        with upath_obj.fs.open(upath_obj.path, mode) as f:
            f.write("".join(lines))

from pathlib import Path
from typing import Optional, Union

from utils.qjf_logger import qjf_log


class Filer:
    def __init__(self) -> None:
        try:
            self.current_working_directory: Path = Path.cwd()
        except Exception as e:
            qjf_log.error(f"Filer __init__ error: {e}")
            raise e

    def __enter__(self) -> "Filer":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        pass

    def ensure_directory(self, directory_path: Union[str, Path]) -> Path:
        qjf_log.debug(f"Filer ensure_directory directory_path: {directory_path}")
        try:
            path = Path(directory_path)
            path.mkdir(parents=True, exist_ok=True)
            return path
        except Exception as e:
            qjf_log.error(f"Filer ensure_directory error: {e}")
            raise e

    def filepath_formatter(
        self, filepath: Union[str, Path], extension: Optional[str] = None
    ) -> str:
        """Format the filepath to include an extension if it is not already
        included.

        Args:
            filepath (Union[str, Path]): The filepath to format.
            extension (Optional[str], optional): The extension to include if
            it is not already included. Defaults to None.

        Returns:
            str: The formatted filepath.
        """
        try:
            path_obj = Path(filepath)
            if not extension:
                return str(filepath)
            extension = extension.lstrip(".")
            if path_obj.suffix.lower() == f".{extension.lower()}":
                return str(filepath)
            return f"{filepath}.{extension}"
        except Exception as e:
            qjf_log.error(f"Filer filepath_formatter error: {e}")
            raise e

    def write_artifact(
        self,
        filepath: Union[str, Path],
        content: str,
        extension: Optional[str] = None,
    ) -> Path:
        """Write an emitted series or table, adding the format extension."""
        try:
            path = Path(self.filepath_formatter(filepath, extension))
            if path.parent != Path(""):
                self.ensure_directory(path.parent)
            path.write_text(content, encoding="utf-8")
            qjf_log.debug(
                f"Filer write_artifact wrote {len(content)} chars to {path}"
            )
            return path
        except Exception as e:
            qjf_log.error(f"Filer write_artifact error: {e}")
            raise e

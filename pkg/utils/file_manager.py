# File output utilities for the k-GRoDel toolkit
import os
import tempfile
import logging
import threading
from typing import List, Optional

from config import config
from errors import InputError

logger = logging.getLogger(__name__)


class FileManager:
    """Writes result files atomically and tracks temporary files for cleanup"""

    def __init__(self, base_dir: Optional[str] = None):
        self.base_dir = base_dir
        self.temp_files: List[str] = []
        self.cleanup_lock = threading.Lock()

    def resolve_path(self, path: str) -> str:
        """Relative paths are placed under the configured output directory"""
        if os.path.isabs(path):
            return path
        return os.path.join(self.base_dir or config.OUTPUT_DIR, path)

    def create_temp_file(self, suffix: str = '', prefix: str = 'grodel_', directory: str = None) -> str:
        """Create a temporary file and track it for cleanup"""
        if directory is None:
            directory = tempfile.gettempdir()

        os.makedirs(directory, exist_ok=True)
        fd, temp_path = tempfile.mkstemp(suffix=suffix, prefix=prefix, dir=directory)
        os.close(fd)

        with self.cleanup_lock:
            self.temp_files.append(temp_path)

        logger.debug(f"Created temporary file: {temp_path}")
        return temp_path

    def cleanup_file(self, file_path: str) -> bool:
        """Remove a tracked temporary file"""
        try:
            removed = False
            if os.path.exists(file_path):
                os.remove(file_path)
                removed = True
                logger.debug(f"Removed temporary file: {file_path}")
            with self.cleanup_lock:
                if file_path in self.temp_files:
                    self.temp_files.remove(file_path)
            return removed
        except OSError as e:
            logger.error(f"Error cleaning up file {file_path}: {e}")
            return False

    def write_text(self, path: str, text: str) -> str:
        """Write ``text`` to ``path`` atomically; returns the final path"""
        target = self.resolve_path(path)
        directory = os.path.dirname(os.path.abspath(target))
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as e:
            raise InputError(f"cannot create output directory {directory}: {e}")

        temp_path = self.create_temp_file(suffix='.part', prefix='.grodel_', directory=directory)
        try:
            with open(temp_path, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
            os.replace(temp_path, target)
        except OSError as e:
            self.cleanup_file(temp_path)
            raise InputError(f"cannot write {target}: {e}")

        with self.cleanup_lock:
            if temp_path in self.temp_files:
                self.temp_files.remove(temp_path)

        logger.info(f"Wrote {target} ({len(text)} bytes)")
        return target

    def create_safe_filename(self, filename: str) -> str:
        """Create a safe filename by removing/replacing problematic characters"""
        safe_chars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_."
        safe_filename = ''.join(c if c in safe_chars else '_' for c in filename)

        while '__' in safe_filename:
            safe_filename = safe_filename.replace('__', '_')

        safe_filename = safe_filename.strip('_.')

        if not safe_filename:
            safe_filename = 'output'

        return safe_filename


# Global file manager instance
file_manager = FileManager()

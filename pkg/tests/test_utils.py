import logging
import os
import tempfile
import unittest
from pathlib import Path

from settings.settings_file import SettingsManager
from utils.debugger import Debugger
from utils.filer import Filer
from utils.qjf_logger import qjf_log


class TestFiler(unittest.TestCase):
    def test_filepath_formatter(self):
        with Filer() as filer:
            self.assertEqual(filer.filepath_formatter("out", ".json"),
                             "out.json")
            self.assertEqual(filer.filepath_formatter("out.CSV", "csv"),
                             "out.CSV")
            self.assertEqual(filer.filepath_formatter("out"), "out")

    def test_write_artifact_creates_directories(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "nested" / "table"
            with Filer() as filer:
                path = filer.write_artifact(target, "g = 2\n", "txt")
            self.assertEqual(path.name, "table.txt")
            self.assertEqual(path.read_text(encoding="utf-8"), "g = 2\n")


class TestDebugger(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.settings = SettingsManager(Path(self.tmp.name))
        self.saved_debug = os.environ.pop("DEBUG", None)

    def tearDown(self):
        self.settings.close()
        self.tmp.cleanup()
        if self.saved_debug is None:
            os.environ.pop("DEBUG", None)
        else:
            os.environ["DEBUG"] = self.saved_debug
        qjf_log.set_level(False)

    def test_debug_mode_from_settings(self):
        self.settings.set_value("debug_mode", "true")
        debugger = Debugger(self.settings)
        self.assertTrue(debugger.debug_mode)
        debugger.debug_mode_check()
        self.assertEqual(qjf_log.level, logging.DEBUG)

    def test_defaults(self):
        debugger = Debugger(self.settings)
        self.assertFalse(debugger.debug_mode)
        self.assertTrue(debugger.log_cli)
        debugger.debug_mode_check()
        self.assertEqual(qjf_log.level, logging.INFO)


if __name__ == "__main__":
    unittest.main()

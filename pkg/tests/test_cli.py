import io
import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from modules.ring_core.errors import ConfigError
from settings.settings_file import SettingsManager
from ui.cli_menu import (
    EXIT_CONFIG,
    EXIT_OK,
    RunConfig,
    build_parser,
    run_cli,
    u_from_y,
)


class CLITestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.directory = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def run_cli(self, *argv):
        out = io.StringIO()
        settings = SettingsManager(self.directory)
        code = run_cli(list(argv), settings, out)
        return code, out.getvalue()


class TestSeriesCommand(CLITestCase):
    def test_json_series(self):
        code, text = self.run_cli(
            "series", "--name", "A", "--order", "2", "--format", "json"
        )
        self.assertEqual(code, EXIT_OK)
        terms = json.loads(text)["terms"]
        self.assertIn({"q": 1, "t": 1, "u": 0, "c": "1/1"}, terms)
        self.assertIn({"q": 1, "t": 0, "u": 1, "c": "-1/1"}, terms)

    def test_y1_evaluation(self):
        code, text = self.run_cli(
            "series", "--name", "H", "--order", "2", "--y1",
            "--format", "csv",
        )
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(all(row.split(",")[2] == "0"
                            for row in text.splitlines()[1:]))

    def test_fast_path_needs_y1(self):
        code, _ = self.run_cli("series", "--name", "A", "--fast")
        self.assertEqual(code, EXIT_CONFIG)

    def test_non_square_y(self):
        code, _ = self.run_cli("series", "--name", "A", "--y", "2")
        self.assertEqual(code, EXIT_CONFIG)

    def test_output_file(self):
        target = self.directory / "a_series"
        code, text = self.run_cli(
            "series", "--name", "G2", "--order", "3", "--format", "json",
            "--output", str(target),
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text, "")
        data = json.loads((self.directory / "a_series.json").read_text())
        self.assertEqual(data["terms"][0]["c"], "-1/24")


class TestInvariantCommands(CLITestCase):
    def test_ninv_abelian_genus_two(self):
        code, text = self.run_cli(
            "ninv", "--surface", "abelian", "--g", "2", "--format", "json"
        )
        self.assertEqual(code, EXIT_OK)
        first = json.loads(text)["invariants"][0]
        self.assertEqual(first["i"], 0)
        self.assertEqual(first["terms"], [{"u": 0, "c": "1/1"}])

    def test_ninv_needs_g(self):
        code, _ = self.run_cli("ninv", "--surface", "abelian")
        self.assertEqual(code, EXIT_CONFIG)

    def test_table(self):
        code, text = self.run_cli("table", "--surface", "abelian",
                                  "--gmax", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("g = 3", text)


class TestVerifyCommand(CLITestCase):
    def test_t_order_window(self):
        code, _ = self.run_cli("verify", "--order", "4", "--t-order", "6")
        self.assertEqual(code, EXIT_CONFIG)

    def test_run_is_recorded(self):
        code, text = self.run_cli(
            "verify", "--suite", "inversion", "--order", "2",
            "--x-order", "4",
        )
        self.assertEqual(code, EXIT_OK, text)
        self.assertIn("0 failed", text)
        code, history = self.run_cli("verify", "--history", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("inversion order 2", history)


class TestSettingsCommand(CLITestCase):
    def test_listing_shows_label_and_description(self):
        code, text = self.run_cli("settings")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Default Order (default_order) = 10", text)
        self.assertIn("# Default q-order G", text)

    def test_set_changes_the_default_order(self):
        code, text = self.run_cli("settings", "--set", "default_order", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("(default_order) = 3", text)
        settings = SettingsManager(self.directory)
        self.assertEqual(settings.get_typed("default_order"), 3)
        settings.close()

    def test_set_rejects_invalid_values(self):
        code, _ = self.run_cli("settings", "--set", "default_order", "0")
        self.assertEqual(code, EXIT_CONFIG)
        code, _ = self.run_cli("settings", "--set", "no_such_key", "1")
        self.assertEqual(code, EXIT_CONFIG)


class TestRunConfig(unittest.TestCase):
    def test_u_from_y(self):
        self.assertEqual(u_from_y("4"), 2)
        self.assertEqual(u_from_y("9/4"), Fraction(3, 2))
        with self.assertRaises(ConfigError):
            u_from_y("2")
        with self.assertRaises(ConfigError):
            u_from_y("-4")

    def test_validate(self):
        config = RunConfig("series", order=3, t_order=10, x_order=4)
        self.assertIs(config.validate(), config)
        with self.assertRaises(ConfigError):
            RunConfig("series", order=0, t_order=10, x_order=4).validate()
        with self.assertRaises(ConfigError):
            RunConfig(
                "series", order=3, t_order=10, x_order=4, name="Z"
            ).validate()

    def test_parser_rejects_both_y_flags(self):
        with self.assertRaises(SystemExit):
            build_parser().parse_args(["series", "--y1", "--y", "4"])


if __name__ == "__main__":
    unittest.main()

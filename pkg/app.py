import sys

from settings.settings_file import SettingsManager
from ui.cli_menu import run_cli
from utils.debugger import Debugger


def main() -> None:
    try:
        settings = SettingsManager()
        debugger = Debugger(settings)
        debugger.debug_mode_check()
        sys.exit(run_cli(sys.argv[1:], settings))
    except Exception as e:
        print(e, file=sys.stderr)
        raise e


if __name__ == "__main__":
    main()

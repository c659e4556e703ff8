import pytest


@pytest.fixture
def report(request):
    """Print a line to the real terminal, bypassing output capture."""
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def _report(line):
        if capman is not None:
            with capman.global_and_fixture_disabled():
                print("\n" + line, flush=True)
        else:
            print(line, flush=True)

    return _report

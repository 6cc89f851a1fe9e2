from pathlib import Path

import toml

pyproject = Path(__file__).parent.parent / "pyproject.toml"
if pyproject.exists():
    data = toml.loads(pyproject.read_text())
    __version__ = data["tool"]["poetry"]["version"]
else:
    # installed from a wheel without the manifest next to the package
    from importlib.metadata import version

    __version__ = version("leafdist")

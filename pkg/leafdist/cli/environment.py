import os

# Only ever import the whole module, never single variables, so tests can patch them.
# BAD: from leafdist.cli.environment import LEAFDIST_CONF_PATH
# GOOD: from leafdist.cli import environment

LEAFDIST_CONF_PATH = os.environ.get("LEAFDIST_CONF_PATH")
LEAFDIST_VERBOSE = os.environ.get("LEAFDIST_VERBOSE")

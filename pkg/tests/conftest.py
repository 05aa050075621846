import os
import sys

# Make the shared test oracles importable regardless of how pytest is invoked.
sys.path.insert(0, os.path.dirname(__file__))

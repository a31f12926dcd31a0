import sys
from pathlib import Path

# make the oracle helpers (pinhole.py, scenes.py) importable from any test
sys.path.insert(0, str(Path(__file__).resolve().parent))

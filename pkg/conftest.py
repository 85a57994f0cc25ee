import os
import sys

# Allow running pytest from a source checkout without installing.
_src = os.path.join(os.path.dirname(__file__), "src")
if _src not in sys.path:
    sys.path.insert(0, _src)

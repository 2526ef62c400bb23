import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))


def residue(fr, m=3):
    """Residue of an exact rational mod m (denominator must be a unit)."""
    return fr.numerator * pow(fr.denominator, -1, m) % m

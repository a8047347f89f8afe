"""
Regenerate corpus/*.ring from the built-in fixtures.

Run: python -m scripts.export_corpus
"""

import sys
import os

# Add the project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from pathlib import Path

from exceptions import CertificateError
from services.corpus import build_fixture, fixtures
from utils.ring_file import format_ring_file, parse_ring_file

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def export():
    CORPUS_DIR.mkdir(exist_ok=True)
    written = 0
    for fixture in fixtures():
        R = build_fixture(fixture)
        comment = "; ".join(f"{key}: {note}" for key, note in fixture.provenance.items())
        path = CORPUS_DIR / f"{fixture.name}.ring"
        text = format_ring_file(R, comment=f"expected {fixture.expected}")
        if not parse_ring_file(text, fixture.name).same_presentation(R):
            raise CertificateError(f"{fixture.name} does not survive a print/parse round trip")
        path.write_text(text, encoding="utf-8")
        print(f"{path.name}: {comment}")
        written += 1
    print(f"\nWrote {written} ring files to {CORPUS_DIR}")


if __name__ == "__main__":
    export()

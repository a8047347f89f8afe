"""
Write the versioned JSON schema of the report format.

Run: python -m scripts.export_schema
"""

import sys
import os
import json

# Add the project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from pathlib import Path

from models.report import FORMAT_VERSION, Report

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"


def export():
    SCHEMA_DIR.mkdir(exist_ok=True)
    path = SCHEMA_DIR / f"report-v{FORMAT_VERSION}.json"
    schema = Report.model_json_schema(mode="serialization")
    path.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"Wrote {path}")


if __name__ == "__main__":
    export()

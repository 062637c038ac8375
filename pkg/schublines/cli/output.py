"""
Output envelope of the command line.

Every command renders its payload in one of three formats:

- `text`: human-oriented, not a stable contract;
- `json`: a single JSON document;
- `csv`: a header row then one row per record, written by pandas.

Floats in csv and text are printed with 17 significant digits by default,
which round-trips every double.
"""
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

import pandas as pd

FORMATS = ("text", "json", "csv")
FLOAT_FORMAT = "%.17g"

def write_records(
    records: List[Dict[str, Any]],
    fmt: str,
    columns: Optional[Sequence[str]]=None,
    stream: Optional[TextIO]=None,
    float_format: str=FLOAT_FORMAT
) -> None:
    """
    Render a list of flat records as a table. `float_format` applies to the
    csv and text renderings.

    `records` only hold JSON-native values; exact counts that may exceed 64
    bits are passed as Python ints and kept exact by pandas' object dtype.
    """
    if stream is None:
        stream = sys.stdout

    if fmt == "json":
        json.dump(records, stream)
        stream.write("\n")
        return

    frame = pd.DataFrame.from_records(records, columns=columns)
    if fmt == "csv":
        frame.to_csv(stream, index=False, float_format=float_format)
    elif fmt == "text":
        stream.write(frame.to_string(
            index=False, float_format=lambda x: float_format % x
        ))
        stream.write("\n")
    else:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")

def write_document(
    document: Dict[str, Any],
    fmt: str,
    text: str,
    stream: Optional[TextIO]=None
) -> None:
    """
    Render a single document: `text` verbatim, the document as JSON, or the
    document as a one-row csv table (nested values JSON-encoded).
    """
    if stream is None:
        stream = sys.stdout

    if fmt == "text":
        stream.write(text.rstrip("\n") + "\n")
    elif fmt == "json":
        json.dump(document, stream)
        stream.write("\n")
    else:
        flat = {k: json.dumps(v) if isinstance(v, (list, dict)) else v
                for k, v in document.items()}
        write_records([flat], fmt, stream=stream)

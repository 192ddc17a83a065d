import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd

from ..models.report import GapReport, MinimumGap, ScanResult
from ..utils.helpers import dump_json, format_fraction, parse_fraction

logger = logging.getLogger(__name__)

GAP_FIELDS = ("gap1", "gap2", "gap3", "gap4")
CSV_COLUMNS = ["x", "y", "gap1", "gap2", "gap3", "gap4", "residual"]
PLOT_COLUMNS = ["x_float", "y_float"]


class ReportStorage:
    """Serializes scan results to JSON or CSV and reads JSON reports back"""

    def __init__(self, data_dir: Union[str, Path, None] = None):
        self.data_dir = Path(data_dir) if data_dir else None

    def _resolve(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        if self.data_dir is not None and not path.is_absolute():
            path = self.data_dir / path
        return path

    @staticmethod
    def _number(value, exact: bool) -> Union[str, float]:
        return format_fraction(value) if exact else float(value)

    @staticmethod
    def _read_number(value, exact: bool):
        return parse_fraction(value) if exact else float(value)

    def to_dict(self, result: ScanResult) -> Dict[str, Any]:
        exact = result.mode == "exact"
        cells = []
        for cell in result.cells:
            entry = {
                "x": format_fraction(cell.x),
                "y": format_fraction(cell.y),
                "residual": self._number(cell.identity_residual, exact),
            }
            for name in GAP_FIELDS:
                entry[name] = self._number(getattr(cell, name), exact)
            if not exact:
                entry["x_float"] = float(cell.x)
                entry["y_float"] = float(cell.y)
            cells.append(entry)

        min_gap4 = None
        if result.min_gap4 is not None:
            min_gap4 = {
                "value": self._number(result.min_gap4.value, exact),
                "x": format_fraction(result.min_gap4.x),
                "y": format_fraction(result.min_gap4.y),
            }

        return {
            "n": result.n,
            "function": result.function,
            "grid": result.grid,
            "mode": result.mode,
            "seed": result.seed,
            "cells": cells,
            "min_gap4": min_gap4,
            "convex_input": result.convex_input,
            "affine_input": result.affine_input,
            "equality_cells": result.equality_cells,
            "total_cells": result.total_cells,
            "violations": list(result.violations),
            "runtime_ms": result.runtime_ms,
        }

    def from_dict(self, data: Dict[str, Any]) -> ScanResult:
        exact = data["mode"] == "exact"
        cells: List[GapReport] = []
        for entry in data["cells"]:
            x, y = parse_fraction(entry["x"]), parse_fraction(entry["y"])
            cells.append(GapReport(
                n=data["n"],
                x=x,
                y=y,
                identity_residual=self._read_number(entry["residual"], exact),
                on_diagonal=x == y,
                affine_samples=data.get("affine_input", False),
                exact=exact,
                **{name: self._read_number(entry[name], exact) for name in GAP_FIELDS},
            ))

        min_gap4 = None
        if data.get("min_gap4") is not None:
            raw = data["min_gap4"]
            min_gap4 = MinimumGap(
                value=self._read_number(raw["value"], exact),
                x=parse_fraction(raw["x"]),
                y=parse_fraction(raw["y"]),
            )

        return ScanResult(
            n=data["n"],
            function=data["function"],
            grid=data["grid"],
            mode=data["mode"],
            seed=data.get("seed", 0),
            cells=cells,
            min_gap4=min_gap4,
            convex_input=data["convex_input"],
            affine_input=data.get("affine_input", False),
            equality_cells=data.get("equality_cells", 0),
            violations=list(data.get("violations", [])),
            runtime_ms=data.get("runtime_ms"),
        )

    def emit_json(self, result: ScanResult) -> str:
        return dump_json(self.to_dict(result))

    def parse_json(self, text: str) -> ScanResult:
        return self.from_dict(json.loads(text))

    def emit_csv(self, result: ScanResult) -> str:
        """One row per cell; float mode adds plot-ready coordinate columns"""
        exact = result.mode == "exact"
        rows = []
        for cell in result.cells:
            row = {
                "x": format_fraction(cell.x),
                "y": format_fraction(cell.y),
                "residual": self._csv_number(cell.identity_residual, exact),
            }
            for name in GAP_FIELDS:
                row[name] = self._csv_number(getattr(cell, name), exact)
            if not exact:
                row["x_float"] = repr(float(cell.x))
                row["y_float"] = repr(float(cell.y))
            rows.append(row)
        columns = CSV_COLUMNS + ([] if exact else PLOT_COLUMNS)
        frame = pd.DataFrame(rows, columns=columns)
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    @staticmethod
    def _csv_number(value, exact: bool) -> str:
        return format_fraction(value) if exact else repr(float(value))

    def save(self, result: ScanResult, path: Union[str, Path], output_format: str = "json") -> Path:
        """
        Write a report file
        :param result: ScanResult to serialize
        :param path: destination file
        :param output_format: json or csv
        :return: the path written
        """
        if output_format == "json":
            text = self.emit_json(result)
        elif output_format == "csv":
            text = self.emit_csv(result)
        else:
            raise ValueError(f"cannot write '{output_format}' reports to a file")

        target = self._resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', newline='') as f:
            f.write(text)
        logger.info(f"Report written to {target} ({output_format}, {result.total_cells} cells)")
        return target

    def load(self, path: Union[str, Path]) -> ScanResult:
        with open(self._resolve(path), 'r') as f:
            return self.parse_json(f.read())


def load_csv_frame(path: Union[str, Path]) -> pd.DataFrame:
    """CSV report as a string-typed DataFrame (fractions stay untouched)"""
    return pd.read_csv(path, dtype=str)


def fraction_column(frame: pd.DataFrame, column: str) -> List[Fraction]:
    return [parse_fraction(v) for v in frame[column]]

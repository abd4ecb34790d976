"""Tabular and JSON reports for the census, the solver and the cohomology checks"""
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from ..models.canonical import CensusResult, shared_classes
from ..models.encoder import BMatrix
from ..models.solver import LinearCrossCheck, SolutionGroup, SolutionPair, VerifyReport
from .rational_matrix import RatMatrix, format_entry

SCHEMA_VERSION = 1

CENSUS_COLUMNS = ['order', 'name', 'mode', 'pair_terms', 'class_id', 'shares_matrix_with']
SOLVER_COLUMNS = ['index', 'sigma', 'label', 'left_translation']


def census_frame(result: CensusResult) -> pd.DataFrame:
    """One row per group of the census"""
    classes = shared_classes(result)
    rows = []
    for entry in result.entries:
        matrix = entry.form.matrix
        others = [name for name in classes[entry.class_id - 1] if name != entry.name]
        rows.append({
            'order': result.order,
            'name': entry.name,
            'mode': matrix.mode,
            'pair_terms': len(matrix.column_pairs(1)),
            'class_id': entry.class_id,
            'shares_matrix_with': ', '.join(others),
        })
    return pd.DataFrame(rows, columns=CENSUS_COLUMNS)


def solver_frame(solutions: List[SolutionPair], translations: Optional[List] = None) -> pd.DataFrame:
    """One row per structured solution"""
    left = {tuple(sigma.images) for sigma in translations} if translations is not None else None
    rows = [
        {
            'index': idx,
            'sigma': pair.sigma.cycle_notation(),
            'label': pair.sigma(1),
            'left_translation': None if left is None else pair.sigma.images in left,
        }
        for idx, pair in enumerate(solutions, start=1)
    ]
    return pd.DataFrame(rows, columns=SOLVER_COLUMNS)


class ReportWriter:
    """Writes report frames to CSV or XLSX"""

    @staticmethod
    def save(df: pd.DataFrame, file_path: Union[str, Path]) -> None:
        """
        Save a report frame; the suffix selects the format

        Args:
            df: DataFrame to save
            file_path: Output path ending in .csv or .xlsx

        Raises:
            ValueError: If the suffix is unsupported or the save fails
        """
        suffix = Path(file_path).suffix.lower()
        try:
            if suffix == '.csv':
                df.to_csv(file_path, index=False)
            elif suffix == '.xlsx':
                df.to_excel(file_path, index=False, engine='openpyxl')
            else:
                raise ValueError(f"Unsupported report format: {suffix or '(none)'}")
        except ValueError:
            raise
        except Exception as e:
            raise ValueError(f"Error saving file: {str(e)}")


def matrix_rows(matrix: Union[RatMatrix, BMatrix]) -> List[List[str]]:
    if isinstance(matrix, BMatrix):
        return [[str(v) for v in row] for row in matrix.entries]
    return [[format_entry(v) for v in matrix.row(i)] for i in range(matrix.rows)]


def solver_payload(b: BMatrix, solutions: List[SolutionPair], group: Optional[SolutionGroup],
                   linear: Optional[LinearCrossCheck], emit_x: bool = False) -> Dict[str, Any]:
    """JSON-ready solver report; the labeling direction needs G and is reported by verify_payload"""
    payload: Dict[str, Any] = {
        'schema': SCHEMA_VERSION,
        'n': b.n,
        'mode': b.mode,
        'solutions': [
            {
                'sigma': pair.sigma.cycle_notation(),
                'images': list(pair.sigma.images),
                'y': matrix_rows(pair.y),
                **({'x': matrix_rows(pair.x)} if emit_x else {}),
            }
            for pair in solutions
        ],
        'group_table': [list(row) for row in group.table] if group else None,
        'labeling': list(group.labeling) if group else None,
        'linear_dimension': linear.dimension if linear else None,
        'linear_contains_all': linear.all_contained if linear else None,
    }
    return payload


def verify_payload(name: str, report: VerifyReport) -> Dict[str, Any]:
    return {
        'schema': SCHEMA_VERSION,
        'group': name,
        'n': report.b.n,
        'mode': report.b.mode,
        'solutions': len(report.solutions),
        'sigmas': [p.sigma.cycle_notation() for p in report.solutions],
        'isomorphic': report.isomorphic,
        'psi': report.psi.direction if report.psi else None,
        'left_translations_solve': report.translations_solve,
        'passed': report.passed,
        'error': report.error,
    }


def census_payload(result: CensusResult) -> Dict[str, Any]:
    return {
        'schema': SCHEMA_VERSION,
        'order': result.order,
        'count': result.count,
        'groups': result.group_count,
        'classes': shared_classes(result),
        'collisions': [list(pair) for pair in result.collisions],
        'extended': list(result.extended),
        'matrices': [matrix_rows(m) for m in result.matrices],
    }

"""Exact enumeration and invariant checks for small-step walks in the three-quadrant cone."""
from .algebra import ts_coeff, ts_eval_expr, ts_invert, ts_mul, ts_sqrt
from .enumeration import (CountTable, assemble_series, boundary_series, count_walks,
                          generating_series, series_A, split_UD)
from .harmonics import (HarmonicGrid, da_predictions, estimate_growth, harmonic_boundary,
                        harmonic_grid)
from .laurent import BiLaurent
from .models import StepSet, companion_steps, delta, get_model, kernel, model_names, splits
from .series import TSeries
from .solve import delta_roots, kernel_root, newton_series
from .theorems import TheoremCheck, check_theorem

__version__ = "0.1.0"

__all__ = [
    "BiLaurent", "TSeries", "StepSet", "CountTable", "HarmonicGrid", "TheoremCheck",
    "ts_mul", "ts_invert", "ts_sqrt", "ts_eval_expr", "ts_coeff",
    "get_model", "model_names", "companion_steps", "splits", "kernel", "delta",
    "count_walks", "assemble_series", "generating_series", "split_UD", "boundary_series", "series_A",
    "newton_series", "delta_roots", "kernel_root",
    "check_theorem", "harmonic_boundary", "harmonic_grid", "estimate_growth", "da_predictions",
]

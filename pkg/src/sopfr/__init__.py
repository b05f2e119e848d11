"""Sum of prime factors with multiplicity, its square-window average and fits."""

from .analysis import (
    BandReport,
    BSeries,
    ConjectureReport,
    DeviationSeries,
    b_series,
    band_report,
    conjecture_scan,
    deviation_series,
    rounded_line_fit,
)
from .averaging import AveragedSeries, LogPointSeries, average_series, to_log_points
from .errors import DegeneracyError, DomainError, ResourceError
from .factor_core import Factorization, SopfrTable, build_table, factorize, is_prime, sopfr
from .fitting import FULL, LINE, FitModel, FitResult, fit, predict
from .pairs import RuthAaronPair, SchinzelQuadruple, family_search, quadruple, scan_pairs

__all__ = [
    "AveragedSeries",
    "BSeries",
    "BandReport",
    "ConjectureReport",
    "DegeneracyError",
    "DeviationSeries",
    "DomainError",
    "FULL",
    "Factorization",
    "FitModel",
    "FitResult",
    "LINE",
    "LogPointSeries",
    "ResourceError",
    "RuthAaronPair",
    "SchinzelQuadruple",
    "SopfrTable",
    "average_series",
    "b_series",
    "band_report",
    "build_table",
    "conjecture_scan",
    "deviation_series",
    "factorize",
    "family_search",
    "fit",
    "is_prime",
    "predict",
    "quadruple",
    "rounded_line_fit",
    "scan_pairs",
    "sopfr",
    "to_log_points",
]

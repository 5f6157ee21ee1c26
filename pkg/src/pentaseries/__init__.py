"""Exact expansion of (1-x)(1-x^2)(1-x^3)... and what follows from it.

Four independent routes to the same sparse sign series (direct product,
two telescoping term streams, closed formula), partition counting by the
resulting recurrence, iterated exact division, and algebraic root-of-unity
multiplicity checks.  All arithmetic is exact integers.
"""

from .bench import (
    CSV_HEADER,
    BenchRecord,
    fitted_exponent,
    records_to_csv,
    records_to_json_objs,
    run_bench,
)
from .partitions import (
    PartitionTable,
    iterated_division_check,
    partition_bruteforce,
    partition_count,
    partition_series,
    partition_values,
)
from .pentagonal import PentTerm, closed_form_series, gpent, pent_sign, pent_terms_upto
from .roots import (
    IntPolynomial,
    cyclotomic,
    poly_divrem,
    poly_mul,
    root_multiplicity,
    totient,
)
from .series import (
    TruncatedSeries,
    agrees_upto,
    convolve,
    div_binomial,
    mul_binomial,
    partial_product,
    series_add,
    series_from_coeffs,
    series_from_json,
    series_inverse,
    series_mul,
    series_to_json,
)
from .telescoping import (
    StageState,
    Term,
    method1_stream,
    method2_stream,
    residual_series,
    stage_emissions,
    stage_states,
    stream_series,
    verify_stage,
)

__all__ = [
    "BenchRecord",
    "CSV_HEADER",
    "IntPolynomial",
    "PartitionTable",
    "PentTerm",
    "StageState",
    "Term",
    "TruncatedSeries",
    "agrees_upto",
    "closed_form_series",
    "convolve",
    "cyclotomic",
    "div_binomial",
    "fitted_exponent",
    "gpent",
    "iterated_division_check",
    "method1_stream",
    "method2_stream",
    "mul_binomial",
    "partial_product",
    "partition_bruteforce",
    "partition_count",
    "partition_series",
    "partition_values",
    "pent_sign",
    "pent_terms_upto",
    "poly_divrem",
    "poly_mul",
    "records_to_csv",
    "records_to_json_objs",
    "residual_series",
    "root_multiplicity",
    "run_bench",
    "series_add",
    "series_from_coeffs",
    "series_from_json",
    "series_inverse",
    "series_mul",
    "series_to_json",
    "stage_emissions",
    "stage_states",
    "stream_series",
    "totient",
    "verify_stage",
]

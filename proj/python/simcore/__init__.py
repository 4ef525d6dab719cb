"""Simultaneous core partitions with a common divisor."""

from ._simcore import (
    anderson_core_to_path,
    anderson_grid,
    anderson_path_to_core,
    bar_decompose,
    bar_lengths,
    big_gamma,
    big_gamma_inverse,
    congruence_scan,
    conjugate,
    decompose,
    dh_grid,
    dh_path_to_selfconj,
    diagonal_hooks,
    extremal_stats,
    first_column_hooks,
    from_diagonal_hooks,
    from_first_column_hooks,
    gamma,
    gamma_inverse,
    gks_decode,
    gks_encode,
    hook_lengths,
    is_st_core,
    is_stbar_core,
    is_t_core,
    is_tbar_core,
    olsson_decode,
    olsson_encode,
    oracle_counts,
    reconstruct,
    run_cli,
    series,
    suite_names,
    verify,
    yinyang_grid,
    yy_path_to_barcore,
    zeta,
    zeta_inverse,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Gabor (windowed Fourier) transform laboratory on finite groups."""

from ._core import (
    Annihilator,
    Character,
    CovarianceResidual,
    FiniteGroup,
    GaborField,
    GaborSupport,
    GaborlabError,
    GroupFunction,
    Irrep,
    KernelMatrix,
    OperatorField,
    QuotientGroup,
    Rational,
    Subgroup,
    UnitaryDual,
    __version__,
    abelian_characters,
    abelian_lower_bound_scan,
    all_subgroups,
    annihilator,
    annihilator_measure,
    constant_one,
    covariance_check,
    delta,
    direct_product,
    dual_verify,
    fourier_transform,
    full_subgroup,
    gabor_reconstruct,
    gabor_transform,
    generated_closure,
    indicator,
    inverse_fourier,
    kernel_matrix,
    make_subgroup,
    modulate,
    named_group,
    normal_subgroups,
    parse_function_spec,
    qup_report_suite,
    quotient_group,
    regular_decomposition,
    restriction_inequality_check,
    subgroup_as_group,
    subgroup_gabor_profile,
    support_measure,
    translate,
    trivial_subgroup,
    unitary_dual,
    weak_qup_witness,
    windowed_slice,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

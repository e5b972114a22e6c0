"""Twisted conjugacy classes, Reidemeister numbers and spectra of finite groups."""

from twconj._core import (  # noqa: F401
    FiniteGroup,
    GroupHom,
    ProductGroup,
    Subgroup,
    TwconjError,
    are_isomorphic,
    center,
    compose,
    conjugacy_classes,
    diag_endo,
    diag_reidemeister,
    direct_product,
    enumerate_automorphisms,
    enumerate_homs,
    fixed_points,
    from_cayley_table,
    hom_from_generator_images,
    hom_from_map,
    hom_image,
    hom_kernel,
    identity_hom,
    inner_automorphism,
    inverse_automorphism,
    is_centerless,
    is_directly_indecomposable,
    perm_endo,
    permuted_diag_endo,
    permuted_diag_reidemeister,
    pointwise_product,
    preset,
    reidemeister_classes,
    reidemeister_number,
    reidemeister_spectrum,
    rho_orbits,
    run_verifier,
    spectrum_of_centreless_product,
    sum_formula_reidemeister,
    triangular_endo,
    trivial_hom,
    twisted_stabilizer,
    verifier_ids,
    wreath_embed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

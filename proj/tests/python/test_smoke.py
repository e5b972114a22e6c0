"""Smoke tests for the python bindings."""

import os
import subprocess

import pytest

import twconj


def test_preset_and_order():
    s3 = twconj.preset("symmetric", [3])
    assert s3.order == 6
    assert len(s3) == 6
    assert not s3.abelian


def test_cayley_table_roundtrip():
    z2 = twconj.from_cayley_table([[0, 1], [1, 0]])
    assert z2.order == 2
    assert z2.mul(1, 1) == 0


def test_bad_table_raises():
    with pytest.raises(twconj.TwconjError):
        twconj.from_cayley_table([[0, 1], [1, 1]])


def test_reidemeister_number_inversion():
    z4 = twconj.preset("cyclic", [4])
    inv = twconj.hom_from_map(z4, z4, [0, 3, 2, 1])
    assert twconj.reidemeister_number(z4, inv) == 2
    assert twconj.fixed_points(inv).elements == [0, 2]


def test_spectra():
    assert twconj.reidemeister_spectrum(twconj.preset("cyclic", [3])) == [1, 3]
    assert twconj.reidemeister_spectrum(twconj.preset("symmetric", [3])) == [3]


def test_diag_formula_matches_brute_force():
    z3 = twconj.preset("cyclic", [3])
    product = twconj.direct_product([z3, z3])
    inv = twconj.hom_from_map(z3, z3, [0, 2, 1])
    ident = twconj.identity_hom(z3)
    formula = twconj.diag_reidemeister([inv, ident])
    brute = twconj.reidemeister_number(product.group, twconj.diag_endo(product, [inv, ident]))
    assert formula == brute == 3


def test_permuted_diag():
    z3 = twconj.preset("cyclic", [3])
    product = twconj.direct_product([z3, z3])
    inv = twconj.hom_from_map(z3, z3, [0, 2, 1])
    sigma = [2, 1]  # 1-based images: the swap
    formula = twconj.permuted_diag_reidemeister([inv, inv], sigma)
    endo = twconj.permuted_diag_endo(product, [inv, inv], sigma)
    assert formula == twconj.reidemeister_number(product.group, endo) == 3


def test_automorphism_counts():
    assert len(twconj.enumerate_automorphisms(twconj.preset("klein4"))) == 6
    s3 = twconj.preset("symmetric", [3])
    assert len(twconj.enumerate_automorphisms(s3)) == 6


def test_spectrum_of_centerless_product():
    s3 = twconj.preset("symmetric", [3])
    assert twconj.spectrum_of_centreless_product([s3], [2]) == [3, 9]


def test_structure_predicates():
    assert twconj.is_centerless(twconj.preset("symmetric", [3]))
    assert not twconj.is_centerless(twconj.preset("cyclic", [4]))
    assert twconj.are_isomorphic(twconj.preset("symmetric", [3]), twconj.preset("dihedral", [3]))


def test_run_verifier():
    result = twconj.run_verifier("zdirectsum", samples=100)
    assert result["ok"]
    assert result["cases"] >= 200


def test_verifier_is_deterministic():
    a = twconj.run_verifier("permuted-diag", samples=20, seed=12345)
    b = twconj.run_verifier("permuted-diag", samples=20, seed=12345)
    assert a == b


def test_cli_json_output_is_byte_identical():
    cli = os.environ.get("TWCONJ_CLI")
    if not cli:
        pytest.skip("TWCONJ_CLI not set")
    cmd = [cli, "verify", "permuted-diag", "--samples", "25", "--seed", "7", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second

import pytest

from qhopf.catalog import BUILTIN_NAMES, load_builtin
from qhopf.errors import UnknownNameError
from qhopf.quasihopf import verify_quasi_ybe, verify_structure


def test_all_builtins_load_and_verify():
    for name in BUILTIN_NAMES:
        entry = load_builtin(name)
        assert entry.name == name
        assert verify_structure(entry.structure).passed


def test_aliases():
    assert load_builtin("e1") is load_builtin("z2-group")
    assert load_builtin("E5") is load_builtin("sweedler-twisted")


def test_unknown_name():
    with pytest.raises(UnknownNameError):
        load_builtin("no-such-entry")


def test_every_r_entry_passes_qybe():
    for name in BUILTIN_NAMES:
        H = load_builtin(name).structure
        if H.r is not None:
            assert verify_quasi_ybe(H).passed


def test_solved_canonical_elements_on_cocycle(e2):
    # the solved pair for the cocycle entry: alpha = g, beta = 1
    H = e2.structure
    A = H.algebra
    assert H.alpha == A.basis_element(A.index_of("g"))
    assert H.beta == A.unit()


def test_twisted_entry_is_genuinely_quasi(e5):
    H = e5.structure
    unit_key = next(iter(H.unit_tensor(3).coeffs))
    assert any(k != unit_key for k in H.phi.coeffs)


def test_catalog_reps_and_twistors_present():
    for name in BUILTIN_NAMES:
        entry = load_builtin(name)
        assert "identity" in entry.twistors
        assert "trivial" in entry.representations
        if name != "small-uqsl2":
            assert "regular" in entry.representations


def test_small_quantum_group_specifics():
    entry = load_builtin("small-uqsl2")
    H = entry.structure
    assert H.algebra.dim == 27
    assert H.algebra.field.kind == "cyclotomic" and H.algebra.field.order == 3
    assert H.r is not None and len(H.r.coeffs) == 27
    # q-commutation survives in the structure constants: KE = q^2 EK
    A = H.algebra
    q = A.field.generator()
    K, E = A.basis_element(A.index_of("K")), A.basis_element(A.index_of("E"))
    EK = A.basis_element(A.index_of("E*K"))
    assert K * E == EK.scale(q * q)

"""Graded modules: construction, submodules, colon ideals, homomorphisms."""

import pytest

from src.groups import cyclic
from src.modules import (
    FiniteGradedModule,
    GradedModuleHom,
    angle_submodule,
    annihilator,
    colon,
    colon_of_element,
    column_module,
    cyclic_submodule,
    enumerate_graded_submodules,
    gaussian_pair_module,
    identity_hom,
    is_graded_check,
    is_submodule,
    module_strongness_class,
    plain_submodule_generated,
    quotient_module,
    regular_module,
    restrict_to_submodule,
    right_multiplication_hom,
    submodule_generated,
    validate_module,
)
from src.rings import matrix_ring, quadratic_ring
from src.utils import CapExceeded, InputError, Limits


@pytest.fixture
def z12i() -> FiniteGradedModule:
    return gaussian_pair_module(12)


# ============================================================================
# CONSTRUCTION AND VALIDATION
# ============================================================================

def test_gaussian_pair_module(z12i):
    assert z12i.size == 144
    assert z12i.support() == [0, 1]
    assert validate_module(z12i).valid
    assert z12i.act(z12i.ring.parse('5'), z12i.parse('1+i')) == z12i.parse('5+5i')


def test_column_and_regular_modules_validate():
    ring = matrix_ring(cyclic(4), (0, 2), 2)
    column = column_module(ring)
    assert column.size == 4
    assert validate_module(column).valid
    assert validate_module(regular_module(quadratic_ring(6, -1, 'i'))).valid
    with pytest.raises(InputError):
        column_module(quadratic_ring(6, -1, 'i'))


def test_grading_violation_reported():
    ring = quadratic_ring(3, -1, 'i')
    # i acting as the identity breaks deg(i*m) = 1 + deg(m)
    module = FiniteGradedModule(ring, ['m'], [3], [0], {(0, 0): {0: 1}, (1, 0): {0: 1}})
    assert 'grading' in {v['kind'] for v in validate_module(module).violations}


def test_modules_need_a_finite_ring():
    from src.rings import monomial_ring
    with pytest.raises(InputError):
        FiniteGradedModule(monomial_ring(2, cyclic(2), 1), ['m'], [2], [0], {})


# ============================================================================
# SUBMODULES
# ============================================================================

def test_angle_submodules(z12i):
    six = angle_submodule(z12i, '6')
    assert six.size() == 4
    assert z12i.parse('6+6i') in six
    assert six.describe() == '<6, 6i>'
    assert angle_submodule(z12i, '6', elementwise=True).size() == 2
    assert angle_submodule(z12i, '4') <= angle_submodule(z12i, '2')


def test_submodules_must_be_generated_by_homogeneous_elements(z12i):
    with pytest.raises(InputError):
        submodule_generated(z12i, ['1+i'])
    assert cyclic_submodule(z12i, z12i.parse('i')).size() == 12


def test_gradedness_of_plain_submodules(z12i):
    mixed = plain_submodule_generated(z12i, ['1+i'])
    assert mixed.size() == 12
    assert not is_graded_check(mixed)
    assert is_graded_check(plain_submodule_generated(z12i, ['6', '6i']))
    six = angle_submodule(z12i, '6')
    assert is_graded_check(six) and is_submodule(z12i, six)


def test_submodule_lattice_size(z12i):
    lattice = enumerate_graded_submodules(z12i)
    # graded submodules are pairs of ideals of Z12
    assert len(lattice) == 36
    assert lattice[0].is_zero()
    assert lattice[-1].size() == 144


def test_lattice_cap(z12i):
    with pytest.raises(CapExceeded):
        enumerate_graded_submodules(z12i, Limits(lattice=10))


def test_colon_and_annihilator(z12i):
    six = angle_submodule(z12i, '6')
    assert colon(z12i, six).size() == 2
    assert annihilator(z12i).is_zero()
    assert annihilator(z12i, six).size() == 6
    assert colon_of_element(z12i, six, z12i.parse('2i')).size() == 4
    with pytest.raises(InputError):
        colon_of_element(z12i, six, z12i.parse('1+i'))


# ============================================================================
# HOMOMORPHISMS, QUOTIENTS, RESTRICTIONS
# ============================================================================

def test_quotient_projection(z12i):
    six = angle_submodule(z12i, '6')
    quotient = quotient_module(z12i, six)
    assert quotient.size == 36
    assert validate_module(quotient).valid
    projection = quotient.projection
    assert projection.validate().valid
    assert projection.is_epi()
    assert projection.kernel() == six


def test_restriction_inclusion(z12i):
    three = angle_submodule(z12i, '3')
    restricted = restrict_to_submodule(z12i, three)
    assert restricted.size == 16
    assert validate_module(restricted).valid
    inclusion = restricted.inclusion
    assert inclusion.is_mono()
    assert inclusion.image(restricted.whole()) == three


def test_right_multiplication_is_not_graded():
    ring = quadratic_ring(6, -1, 'i')
    hom = right_multiplication_hom(ring, 'i')
    assert hom.validate().valid
    assert not hom.is_graded()
    assert hom.is_isomorphism()
    assert right_multiplication_hom(ring, '5').is_graded()


def test_hom_arguments_checked(z12i):
    other = gaussian_pair_module(12)
    with pytest.raises(InputError):
        GradedModuleHom(z12i, other, z12i.basis())
    with pytest.raises(InputError):
        GradedModuleHom(z12i, z12i, z12i.basis()[:1])
    with pytest.raises(InputError):
        GradedModuleHom(z12i, z12i, z12i.basis(), kind='sideways')
    assert identity_hom(z12i).is_isomorphism()


# ============================================================================
# STRONGLY GRADED MODULES
# ============================================================================

def test_module_strongness(z12i):
    assert module_strongness_class(z12i).outcome == 'first_strong'
    assert module_strongness_class(regular_module(quadratic_ring(6, -1, 'i'))).outcome == 'strong'

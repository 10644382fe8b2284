import pytest

from modgraph.caps import Caps
from modgraph.fields import gf_build
from modgraph.modules import direct_sum, quotient, regular_module, submodule_generated
from modgraph.rings import ring_from_field, ring_triangular, ring_zmod
from modgraph.zoo import InstanceContext, family, named_instances


@pytest.fixture(scope="session")
def caps():
    return Caps()


@pytest.fixture(scope="session")
def named_contexts():
    return [InstanceContext(inst) for inst in named_instances()]


@pytest.fixture(scope="session")
def family16_contexts():
    return list(family(16))


@pytest.fixture(scope="session")
def ctx_by_id(named_contexts):
    return {c.instance_id: c for c in named_contexts}


@pytest.fixture(scope="session")
def z12_module():
    return regular_module(ring_zmod(12))


@pytest.fixture(scope="session")
def f2_squared():
    reg = regular_module(ring_from_field(gf_build(2, 1)))
    return direct_sum(reg, reg)


@pytest.fixture(scope="session")
def triangular_f4():
    return regular_module(ring_triangular(gf_build(2, 2), 1))


@pytest.fixture(scope="session")
def z2_x_z4():
    reg = regular_module(ring_zmod(4))
    half, _ = quotient(reg, submodule_generated(reg, [2]))
    return direct_sum(half, reg)

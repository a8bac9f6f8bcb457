import pytest

from fermat_lab import _kernels
from fermat_lab.modmath import pow_mod


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile (or load from cache) the JIT kernels once per session."""
    _kernels.warmup()
    return _kernels.HAVE_NUMBA


def euler_legendre(a: int, p: int) -> int:
    """Euler-criterion Legendre oracle: a^((p-1)/2) mapped to {-1, 0, +1}."""
    t = pow_mod(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t

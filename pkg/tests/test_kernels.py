import os
import subprocess
import sys

import pytest

from corpus import corpus
from tcw import kernels, ring
from tcw.charnum import chern_numbers
from tcw.symfun import partitions


def test_backends_listed():
    assert "python" in kernels.available_backends()
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@pytest.mark.skipif("cython" not in kernels.available_backends(), reason="extension not built")
def test_backends_agree_on_corpus():
    for name, fan in corpus()[::2]:
        w = ring.fixed_point_weights(fan)
        parts = partitions(fan.dim)
        assert kernels.chern_sums(w, parts, "cython") == kernels.chern_sums(w, parts, "python"), name


def test_pure_python_switch():
    env = dict(os.environ, TCW_PURE_PYTHON="1")
    code = ("from tcw import kernels; from tcw.charnum import chern_numbers; "
            "from tcw.constructions import cpn; "
            "print(kernels.IMPLEMENTATION, chern_numbers(cpn(4)).values)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split(None, 1)
    assert out[1].strip() == str(chern_numbers(__import__("tcw").constructions.cpn(4)).values)
    assert out[0] == kernels.get_backend("python").IMPLEMENTATION

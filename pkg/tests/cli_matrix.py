"""Scripted CLI invocations with their expected exit codes."""

import io

from dblcat import dslio
from dblcat.cli import cli

GLOB = "(id_P,id_P,id_P,const0_P;const0_P=>id_P)"

MATRIX = [
    (["validate", "--fixture", "TERMINAL"], 0),
    (["validate", "--fixture", "POS2_QUIN"], 0),
    (["validate", "--fixture", "MUTANT_INTERCHANGE"], 1),
    (["validate", "--fixture", "MUTANT_BOUNDARY"], 1),
    (["validate", "--fixture", "POS2"], 0),
    (["companions", "t", "--fixture", "TWOGROUP_QUIN"], 0),
    (["companions", "nope", "--fixture", "TWOGROUP_QUIN"], 2),
    (["conjoints", "const0", "--fixture", "POS2_QUIN"], 0),
    (["conjoints", "u", "--fixture", "WALKING_ARROW_SQ"], 0),
    (["mate", "--fixture", "POS2_QUIN", "--c1", "const0_P", "--c2", "id_P", "--cell", GLOB,
      "--factors", "id_P", "id_P"], 0),
    (["mate", "--fixture", "POS2_QUIN", "--c1", "const0_P", "--c2", "id_P", "--cell", GLOB], 2),
    (["mate", "--fixture", "TWOGROUP_QUIN", "--calculus", "companion", "--c1", "t#1",
      "--c2", "t", "--cell", "(1,1,t,t;id_t)"], 0),
    (["mate-table", "--fixture", "POS2_QUIN", "--iota", "const0_P", "--iota-b", "id_P",
      "--f-src", "const0_P", "--f-dst", "id_P", "--seed", GLOB], 0),
    (["mate-table", "--fixture", "POS2_QUIN", "--iota", "!", "--f-src", "const0_P",
      "--f-dst", "id_P", "--seed", GLOB], 2),
    (["paste", "--fixture", "TWOGROUP_QUIN", "--row", "(1,1,1,1;s_1)", "(1,1,1,1;s_1)"], 0),
    (["paste", "--fixture", "POS2_QUIN", "--row", "(id_P,id_P,id_P,id_P;id_P=>id_P)",
      "(id_Q,id_Q,id_Q,id_Q;id_Q=>id_Q)"], 1),
    (["paste", "--fixture", "POS2_QUIN", "--row", "ghost"], 2),
    (["quin", "--fixture", "POS2"], 0),
    (["quin", "--fixture", "POS2_QUIN"], 2),
    (["sq", "--fixture", "WALKING_ARROW"], 0),
    (["transpose", "--fixture", "WALKING_ISO_SQ"], 0),
    (["str", "--fixture", "TWOGROUP_QUIN"], 0),
    (["conj", "--fixture", "POS2_QUIN"], 0),
    (["check-psfunctor", "--fixture", "PSF_COCYCLE"], 0),
    (["check-psfunctor", "--fixture", "MUTANT_PSF_UNIT_H"], 1),
    (["check-psfunctor", "--fixture", "POS2_QUIN"], 2),
    (["fixture", "Z2_GROUPOID"], 0),
    (["fixture", "NOT_A_FIXTURE"], 2),
    (["validate"], 2),
    (["frobnicate"], 2),
    ([], 2),
]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def check_output(text):
    """Machine output must parse and re-serialize to the same bytes."""
    if not text:
        return True
    return dslio.serialize(dslio.parse(text)) == text

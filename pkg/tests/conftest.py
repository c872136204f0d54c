from pathlib import Path

import pytest

from rprime import FieldSpec, build_tables, load_field_file

FIELDS_DIR = Path(__file__).resolve().parent.parent / "fields"

_FIELD_FILES = {
    "Q": "q.json",
    "Qi": "gaussian.json",
    "Qsqrt2": "qsqrt2.json",
    "Qsqrtm5": "qsqrtm5.json",
    "cubic": "cubic_x3mxm1.json",
}


@pytest.fixture(scope="session")
def fields() -> dict[str, FieldSpec]:
    return {name: load_field_file(str(FIELDS_DIR / fn)) for name, fn in _FIELD_FILES.items()}


@pytest.fixture(scope="session")
def field_q(fields):
    return fields["Q"]


@pytest.fixture(scope="session")
def field_qi(fields):
    return fields["Qi"]


@pytest.fixture(scope="session")
def field_cubic(fields):
    return fields["cubic"]


@pytest.fixture(scope="session")
def table_q_1e4(field_q):
    return build_tables(field_q, 10**4)


@pytest.fixture(scope="session")
def table_qi_1e4(field_qi):
    return build_tables(field_qi, 10**4)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symplie import catalog, double_extend
from symplie.catalog import (admissible_family, classify_upto6, family_names,
                             family_parameter_grid)


@pytest.fixture(scope="session")
def entries():
    """Catalog entries built once per test session."""
    return {name: catalog.get(name) for name in catalog.names()}


@pytest.fixture(scope="session")
def family_sweep():
    """Every family grid point, extended and classified; shared because
    the sweep is the most expensive fixture in the suite."""
    results = {}
    for fam in family_names():
        base_name = catalog.FAMILY_BASES[fam]
        base = catalog.get(base_name).algebra
        points = []
        for params in family_parameter_grid(fam):
            got_base_name, pair = admissible_family(fam, params)
            assert got_base_name == base_name
            ext = double_extend(base, pair)
            points.append((params, pair, ext, classify_upto6(ext)))
        results[fam] = points
    return results

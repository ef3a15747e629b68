import json
import os
import sys
import tempfile
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

# Point every Settings() at a scratch file before the modules create theirs.
_scratch = Path(tempfile.mkdtemp(prefix="cellgap-tests-"))
_settings_file = _scratch / "settings.json"
_settings_file.write_text(json.dumps({'log_dir': str(_scratch / "logs"), 'console_log_level': 'ERROR'}))
os.environ['CELLGAP_SETTINGS'] = str(_settings_file)

hypothesis_settings.register_profile("fast", max_examples=30, deadline=None,
                                     suppress_health_check=[HealthCheck.too_slow])
hypothesis_settings.register_profile("debugger", max_examples=5, deadline=None)
hypothesis_settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))

from modules.diagram import FamilyId  # noqa: E402
from modules.families import FamilyInstance, family_monoid, transformation_monoid  # noqa: E402


@pytest.fixture(scope="session")
def tl3():
    return family_monoid(FamilyInstance(FamilyId.TL, 3))


@pytest.fixture(scope="session")
def tl4():
    return family_monoid(FamilyInstance(FamilyId.TL, 4))


@pytest.fixture(scope="session")
def tl5():
    return family_monoid(FamilyInstance(FamilyId.TL, 5))


@pytest.fixture(scope="session")
def br4():
    return family_monoid(FamilyInstance(FamilyId.BRAUER, 4))


@pytest.fixture(scope="session")
def t3():
    return transformation_monoid(3)


@pytest.fixture
def settings_file(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({'log_dir': str(tmp_path / "logs")}))
    return str(path)

"""Command-line interface: artifacts, exit codes, serialization format."""

import json
import math

import pytest

from hardynum import HalfPlane, Sector, dump_domain
from hardynum.cli import main


@pytest.fixture
def halfplane_json(tmp_path):
    path = tmp_path / "half_plane.json"
    dump_domain(HalfPlane(1.0), str(path))
    return str(path)


@pytest.fixture
def disk_exterior_json(tmp_path):
    path = tmp_path / "disk_exterior.json"
    path.write_text('{"shape": "disk_exterior", "radius": 1.0, "basepoint": [2.0, 0.0]}')
    return str(path)


def read_json(path):
    return json.loads(path.read_text())


# ---- hm ---------------------------------------------------------------------


def test_hm_writes_profile_csv(tmp_path, halfplane_json):
    out = tmp_path / "out"
    rc = main(["hm", "--domain", halfplane_json, "--samples", "2000",
               "--grid", "2,2,5", "--out", str(out)])
    assert rc == 0
    lines = (out / "profile.csv").read_text().splitlines()
    assert lines[0] == "r,omega,stderr,local_slope"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert float(first[0]) == 2.0
    assert 0.0 <= float(first[1]) <= 1.0
    assert first[3] == ""  # no slope for the first grid point
    assert float(lines[2].split(",")[3]) > 0.0


# ---- hardy ------------------------------------------------------------------


def test_hardy_estimates_halfplane_exponent(tmp_path, halfplane_json):
    out = tmp_path / "out"
    rc = main(["hardy", "--domain", halfplane_json, "--samples", "20000",
               "--grid", "2,2,10", "--window", "3", "--out", str(out)])
    assert rc == 0
    payload = read_json(out / "hardy.json")
    assert 0.7 <= payload["value"] <= 1.3
    assert payload["warnings"] == []
    assert payload["seed"] == 0
    assert payload["n_samples"] == 20000
    assert 3 <= len(payload["local_slopes"]) <= 9  # noisy tail radii are trimmed
    assert payload["domain"]["shape"] == "half_plane"
    assert (out / "profile.csv").exists()


def test_hardy_flags_non_regular_domain(tmp_path, disk_exterior_json):
    out = tmp_path / "out"
    rc = main(["hardy", "--domain", disk_exterior_json, "--samples", "500",
               "--grid", "2,2,5", "--window", "2", "--out", str(out)])
    assert rc == 0  # infinity is a legitimate result, not a failure
    payload = read_json(out / "hardy.json")
    assert payload["value"] == "inf"
    assert "non_regular_domain" in payload["warnings"]


# ---- member -----------------------------------------------------------------


def test_member_hardy_space_verdict(tmp_path, halfplane_json):
    out = tmp_path / "out"
    rc = main(["member", "--domain", halfplane_json, "--samples", "20000",
               "--grid", "2,2,10", "--p", "0.5", "--out", str(out)])
    assert rc == 0
    payload = read_json(out / "member.json")
    assert payload["alpha"] is None  # plain Hardy-space query
    assert payload["verdict"] == "member"
    assert payload["rationale"] == "decay_sufficient"
    assert payload["p"] == 0.5
    assert 0.5 < payload["critical_ratio"] < 1.5
    assert payload["fit"]["n_points"] >= 2


def test_member_bergman_space_verdict(tmp_path, halfplane_json):
    out = tmp_path / "out"
    rc = main(["member", "--domain", halfplane_json, "--samples", "20000",
               "--grid", "2,2,10", "--p", "3.0", "--alpha", "0.0",
               "--out", str(out)])
    assert rc == 0
    payload = read_json(out / "member.json")
    assert payload["alpha"] == 0.0
    assert payload["query_ratio"] == 1.5  # p / (alpha + 2)
    assert payload["verdict"] == "not_member"


def test_member_requires_p(tmp_path, halfplane_json):
    with pytest.raises(SystemExit) as exc:
        main(["member", "--domain", halfplane_json, "--out", str(tmp_path / "o")])
    assert exc.value.code == 2


# ---- norms ------------------------------------------------------------------


def test_norms_writes_catalog_profiles(tmp_path):
    out = tmp_path / "out"
    rc = main(["norms", "--out", str(out)])
    assert rc == 0
    payload = read_json(out / "norms.json")
    funcs = payload["functions"]
    assert set(funcs) == {"cayley", "sector_power_half", "exp_cayley", "identity"}
    assert funcs["identity"]["hardy_classification"] == "bounded"
    assert funcs["identity"]["h_hat"] == "inf"
    assert funcs["exp_cayley"]["bergman_classification"] == "unbounded"
    assert abs(funcs["cayley"]["h_hat"] - 1.0) <= 0.05
    csv = (out / "norms_cayley_hardy.csv").read_text().splitlines()
    assert csv[0] == "gap,log_value,slope"
    assert len(csv) > 2


# ---- verify -----------------------------------------------------------------


def test_verify_runs_all_checks(tmp_path, capsys):
    out = tmp_path / "out"
    rc = main(["verify", "--samples", "20000", "--out", str(out)])
    assert rc == 0
    assert "verification passed: 63 checks" in capsys.readouterr().out
    payload = read_json(out / "verify.json")
    assert len(payload) == 63
    assert all(entry["passed"] for entry in payload)
    kinds = {entry["name"] for entry in payload}
    assert "mc_vs_oracle_half_plane" in kinds
    assert "mc_vs_oracle_right_angle_sector" in kinds
    assert "circle_average_vs_tail" in kinds


# ---- report -----------------------------------------------------------------


def test_report_emits_gnuplot_template(tmp_path, halfplane_json):
    out = tmp_path / "out"
    rc = main(["report", "--domain", halfplane_json, "--samples", "2000",
               "--grid", "2,2,6", "--out", str(out)])
    assert rc == 0
    text = (out / "report.gp").read_text()
    assert "plot" in text
    assert "profile.csv" in text
    assert "{" not in text  # every placeholder was substituted
    assert (out / "profile.csv").exists()


# ---- serialization format -----------------------------------------------------


def test_floats_survive_json_round_trip_exactly(tmp_path, halfplane_json):
    out = tmp_path / "out"
    main(["hm", "--domain", halfplane_json, "--samples", "2000",
          "--grid", "2,2,5", "--out", str(out)])
    text = (out / "profile.csv").read_text()
    for line in text.splitlines()[1:]:
        omega = line.split(",")[1]
        # 17 significant digits reproduce the double exactly
        assert float(omega) == float(repr(float(omega)))
        assert "e" in omega or "." in omega or omega in {"0", "1"}


def test_non_finite_values_serialized_as_strings(tmp_path, disk_exterior_json):
    out = tmp_path / "out"
    main(["hardy", "--domain", disk_exterior_json, "--samples", "500",
          "--grid", "2,2,5", "--window", "2", "--out", str(out)])
    raw = (out / "hardy.json").read_text()
    assert '"inf"' in raw
    payload = json.loads(raw)  # still plain JSON, no NaN extensions
    assert payload["value"] == "inf"


# ---- determinism ---------------------------------------------------------------


def test_byte_identical_reruns(tmp_path, halfplane_json):
    args = ["hardy", "--domain", halfplane_json, "--samples", "5000",
            "--grid", "2,2,8", "--seed", "7"]
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        assert main(args + ["--out", str(out)]) == 0
        outs.append((out / "hardy.json").read_bytes()
                    + (out / "profile.csv").read_bytes())
    assert outs[0] == outs[1]


def test_chunk_size_never_changes_artifacts(tmp_path, halfplane_json):
    base = ["hm", "--domain", halfplane_json, "--samples", "5000",
            "--grid", "2,2,6", "--seed", "3"]
    blobs = []
    for chunk in ("512", "5000", "999983"):
        out = tmp_path / f"c{chunk}"
        assert main(base + ["--chunk", chunk, "--out", str(out)]) == 0
        blobs.append((out / "profile.csv").read_bytes())
    assert blobs[0] == blobs[1] == blobs[2]


# ---- failure modes ---------------------------------------------------------------


def test_missing_domain_file_exits_2(tmp_path, capsys):
    rc = main(["hardy", "--domain", str(tmp_path / "nope.json"),
               "--out", str(tmp_path / "o")])
    assert rc == 2
    assert capsys.readouterr().err.strip() != ""


def test_malformed_grid_exits_2(tmp_path, halfplane_json):
    rc = main(["hardy", "--domain", halfplane_json, "--grid", "banana",
               "--out", str(tmp_path / "o")])
    assert rc == 2


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_sector_domain_via_json(tmp_path):
    dom = tmp_path / "sector.json"
    dump_domain(Sector(math.pi / 2, 1.0), str(dom))
    out = tmp_path / "out"
    rc = main(["hardy", "--domain", str(dom), "--samples", "20000",
               "--grid", "2,2,9", "--out", str(out)])
    assert rc == 0
    payload = read_json(out / "hardy.json")
    assert 1.4 <= payload["value"] <= 2.6

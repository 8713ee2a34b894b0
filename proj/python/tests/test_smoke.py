"""Smoke tests for the liep Python module (and a couple of CLI checks)."""

import json
import os
import subprocess

import pytest

import liep

HEISENBERG_GF3 = {
    "field": {"p": 3, "k": 1},
    "dim": 3,
    "brackets": [{"i": 1, "j": 2, "value": [[0], [0], [1]]}],
}


def restricted(algebra, images):
    return json.dumps({"algebra": algebra, "pmap": {"images": images}})


class TestField:
    def test_prime_field_arithmetic(self):
        F = liep.Field(3)
        assert F.add([2], [2]) == [1]
        assert F.mul([2], [2]) == [1]
        assert F.inv([2]) == [2]
        assert F.order == 3

    def test_gf4_multiplication_reduces_by_modulus(self):
        F = liep.Field(2, 2, [1, 1, 1])
        assert F.mul([0, 1], [0, 1]) == [1, 1]  # t*t = t+1
        assert F.frobenius([0, 1]) == [1, 1]
        assert F.frobenius_root([1, 1]) == [0, 1]

    def test_artin_schreier_subspace_of_gf4(self):
        F = liep.Field(2, 2, [1, 1, 1])
        K = [x for x in F.elements() if F.in_artin_schreier(x)]
        assert K == [[0, 0], [1, 0]]  # {0, 1}

    def test_k_beta_gf3(self):
        F = liep.Field(3)
        assert all(F.in_k_beta([1], x) for x in F.elements())
        assert [x for x in F.elements() if F.in_k_beta([2], x)] == [[0]]

    def test_errors(self):
        with pytest.raises(ValueError):
            liep.Field(4)
        F = liep.Field(5)
        with pytest.raises(ValueError):
            F.inv([0])
        with pytest.raises(ValueError):
            F.in_artin_schreier([1])


class TestClassify:
    def test_zero_map_on_heisenberg_gf3(self):
        label = json.loads(liep.classify_json(restricted(
            HEISENBERG_GF3, [[[0], [0], [0]]] * 3)))
        assert label == {"family": "L_{3,2}^1", "params": []}

    def test_nonzero_map_on_heisenberg_gf3(self):
        label = json.loads(liep.classify_json(restricted(
            HEISENBERG_GF3,
            [[[0], [0], [2]], [[0], [0], [1]], [[0], [0], [0]]])))
        assert label == {"family": "L_{3,2}^2", "params": []}

    def test_char2_xi_class(self):
        algebra = {
            "field": {"p": 2, "k": 1},
            "dim": 3,
            "brackets": [{"i": 1, "j": 2, "value": [[0], [0], [1]]}],
        }
        label = json.loads(liep.classify_json(restricted(algebra, [[[0], [0], [0]]] * 3)))
        assert label == {"family": "K_{3,2}^1", "params": [[0]]}

    def test_invalid_pmap_rejected(self):
        with pytest.raises(ValueError):
            liep.classify_json(restricted(
                HEISENBERG_GF3,
                [[[1], [0], [0]], [[0], [0], [0]], [[0], [0], [0]]]))


class TestVerify:
    def test_heisenberg_gf3_has_two_orbits(self):
        report = json.loads(liep.cross_check_json(3, 1, "L_{3,2}"))
        assert report["mismatches"] == []
        assert report["total"] == 9
        assert sorted(o["size"] for o in report["orbits"]) == [1, 8]

    def test_l43_not_restrictable_in_char_2(self):
        report = json.loads(liep.cross_check_json(2, 1, "L_{4,3}"))
        assert report["total"] == 0
        assert report["orbits"] == []
        assert "not restrictable" in report["note"]

    def test_budget_error(self):
        with pytest.raises(RuntimeError):
            liep.cross_check_json(5, 1, "L_{4,1}", [], 1000, 1000, 1)


class TestDatabase:
    def test_gf3_database_has_26_classes(self):
        db = json.loads(liep.class_database_json(3))
        assert sum(len(a["classes"]) for a in db["algebras"]) == 26

    def test_round_trip_through_classify(self):
        db = json.loads(liep.class_database_json(3))
        for algebra_entry in db["algebras"]:
            name = algebra_entry["algebra"]
            dim = algebra_entry["dim"]
            brackets = []
            if name in ("L_{3,2}", "L_{4,2}"):
                value = [[0]] * dim
                value[2] = [1]
                brackets = [{"i": 1, "j": 2, "value": value}]
            if name == "L_{4,3}":
                brackets = [
                    {"i": 1, "j": 2, "value": [[0], [0], [1], [0]]},
                    {"i": 1, "j": 3, "value": [[0], [0], [0], [1]]},
                ]
            algebra = {"field": {"p": 3, "k": 1}, "dim": dim, "brackets": brackets}
            for entry in algebra_entry["classes"]:
                got = json.loads(liep.classify_json(restricted(algebra, entry["images"])))
                assert got == entry["label"], f"{name}: {entry['label']}"

    def test_catalog_names(self):
        assert "L_{3,2}" in liep.catalog_names()
        assert len(liep.catalog_names()) == 7


@pytest.mark.skipif("LIEP_CLI" not in os.environ, reason="CLI path not provided")
class TestCli:
    def test_verify_exit_codes(self, tmp_path):
        cli = os.environ["LIEP_CLI"]
        out = subprocess.run(
            [cli, "verify", "--p", "2", "--k", "1", "--algebra", "L_{3,2}"],
            capture_output=True, text=True)
        assert out.returncode == 0
        report = json.loads(out.stdout)
        assert report["reports"][0]["mismatches"] == []

        # explicitly selected over-budget case: exit 3
        out = subprocess.run(
            [cli, "verify", "--p", "5", "--k", "1", "--algebra", "L_{4,1}"],
            capture_output=True, text=True)
        assert out.returncode == 3

        # malformed json: exit 1
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        out = subprocess.run([cli, "classify", str(bad)], capture_output=True, text=True)
        assert out.returncode == 1

        # semantically invalid pmap: exit 2
        invalid = tmp_path / "invalid.json"
        invalid.write_text(restricted(
            HEISENBERG_GF3, [[[1], [0], [0]], [[0], [0], [0]], [[0], [0], [0]]]))
        out = subprocess.run([cli, "classify", str(invalid)], capture_output=True, text=True)
        assert out.returncode == 2

        # L_{4,3} in characteristic 2: exit 2 with the reason spelled out
        l43 = {
            "field": {"p": 2, "k": 1},
            "dim": 4,
            "brackets": [
                {"i": 1, "j": 2, "value": [[0], [0], [1], [0]]},
                {"i": 1, "j": 3, "value": [[0], [0], [0], [1]]},
            ],
        }
        nr = tmp_path / "l43_gf2.json"
        nr.write_text(restricted(l43, [[[0], [0], [0], [0]]] * 4))
        out = subprocess.run([cli, "classify", str(nr)], capture_output=True, text=True)
        assert out.returncode == 2
        assert "not restrictable" in out.stderr

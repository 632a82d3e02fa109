"""Key/ciphertext JSON schemas: hex encoding, round trips, scheme tags."""

import json

import pytest

from dualphe import ceg, elgamal as eg, fileformat as ff
from dualphe.errors import CiphertextMalformed, InvalidParams
from dualphe.rng import SequenceSource


@pytest.fixture
def eg_keys():
    return eg.keygen(23, 5, SequenceSource([6]))


@pytest.fixture
def ceg_keys():
    return ceg.ceg_keygen(23, 5, (3, 5), SequenceSource([6]))


class TestHex:
    def test_minimal_lowercase(self):
        assert ff.to_hex(255) == "ff"
        assert ff.to_hex(0) == "0"
        assert ff.to_hex(4096) == "1000"

    def test_round_trip(self):
        for x in (0, 1, 22, 65537, 2**64 - 59):
            assert ff.from_hex(ff.to_hex(x)) == x

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            ff.to_hex(-1)


class TestKeyFiles:
    def test_elgamal_public_dict(self, eg_keys):
        pk, _ = eg_keys
        assert ff.public_key_dict("elgamal", pk) == {
            "scheme": "elgamal", "n": "17", "g": "5", "h": "8"}

    def test_ceg_public_dict_carries_basis(self, ceg_keys):
        pk, _ = ceg_keys
        d = ff.public_key_dict("ceg", pk)
        assert d["d"] == ["3", "5"]

    def test_secret_dict_adds_exponent(self, eg_keys):
        pk, sk = eg_keys
        d = ff.secret_key_dict("elgamal", pk, sk)
        assert d["k"] == "6"

    def test_round_trip_elgamal(self, eg_keys):
        pk, sk = eg_keys
        data = json.loads(ff.dumps(ff.secret_key_dict("elgamal", pk, sk)))
        scheme, pk2, sk2 = ff.load_secret_key(data)
        assert scheme == "elgamal"
        assert (pk2.n, pk2.g, pk2.h) == (pk.n, pk.g, pk.h)
        assert sk2.k == sk.k

    def test_round_trip_ceg(self, ceg_keys):
        pk, sk = ceg_keys
        data = json.loads(ff.dumps(ff.secret_key_dict("ceg", pk, sk)))
        scheme, pk2, sk2 = ff.load_secret_key(data)
        assert scheme == "ceg"
        assert pk2.basis.moduli == pk.basis.moduli
        assert sk2.k == sk.k

    def test_basis_presence_tied_to_scheme(self, eg_keys):
        pk, _ = eg_keys
        data = ff.public_key_dict("elgamal", pk)
        data["d"] = ["3", "5"]
        with pytest.raises(InvalidParams):
            ff.load_public_key(data)

    def test_public_file_is_not_a_secret_key(self, eg_keys):
        pk, _ = eg_keys
        with pytest.raises(InvalidParams):
            ff.load_secret_key(ff.public_key_dict("elgamal", pk))


class TestCiphertextFiles:
    def test_elgamal_round_trip(self, eg_keys):
        pk, _ = eg_keys
        ct = eg.encrypt(pk, 10, SequenceSource([3]))
        data = json.loads(ff.dumps(ff.ciphertext_dict("elgamal", ct)))
        assert ff.load_ciphertext(data)[1] == ct

    def test_ceg_round_trip(self, ceg_keys):
        pk, _ = ceg_keys
        ct = ceg.ceg_encrypt(pk, 7, SequenceSource([2, 3]))
        data = json.loads(ff.dumps(ff.ciphertext_dict("ceg", ct)))
        loaded = ff.load_ciphertext(data, basis_len=2)[1]
        assert loaded == ct
        assert loaded.add_count == 0

    def test_scheme_tag_mismatch(self, eg_keys):
        pk, _ = eg_keys
        ct = eg.encrypt(pk, 10, SequenceSource([3]))
        data = ff.ciphertext_dict("elgamal", ct)
        with pytest.raises(CiphertextMalformed):
            ff.load_ciphertext(data, expected_scheme="ceg")

    def test_pair_count_checked(self, ceg_keys):
        pk, _ = ceg_keys
        ct = ceg.ceg_encrypt(pk, 7, SequenceSource([2, 3]))
        data = ff.ciphertext_dict("ceg", ct)
        with pytest.raises(CiphertextMalformed):
            ff.load_ciphertext(data, basis_len=3)

    def test_missing_fields(self):
        with pytest.raises(CiphertextMalformed):
            ff.load_ciphertext({"scheme": "elgamal", "c1": "5"})

    def test_unknown_scheme(self):
        with pytest.raises(CiphertextMalformed):
            ff.load_ciphertext({"scheme": "rsa", "c1": "1", "c2": "2"})


class TestCanonicalDump:
    def test_sorted_keys_trailing_newline(self):
        text = ff.dumps({"b": "2", "a": "1"})
        assert text == '{"a":"1","b":"2"}\n'

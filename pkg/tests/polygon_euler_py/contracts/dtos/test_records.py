# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import json
import unittest

from src.polygon_euler_py.contracts.dtos.check import CheckRecord, VerifyPayload
from src.polygon_euler_py.contracts.dtos.chi import ChiPayload, PositionRecord
from src.polygon_euler_py.contracts.dtos.common.base import SCHEMA_VERSION, OutputRecord, from_json
from src.polygon_euler_py.contracts.dtos.spectrum import (FractionRecord, LevelRecord,
                                                          SpectrumPayload, StratumRecord)


class TestRecords(unittest.TestCase):

    def setUp(self):
        stratum = StratumRecord(alpha=3, beta=2, value=FractionRecord(2, 3), count="5", index=2)
        self.payload = SpectrumPayload(
            levels=[LevelRecord(value=FractionRecord(2, 3), strata=[stratum])],
            phi="3", critical_points="7", psi="2")
        self.record = OutputRecord(command="spectrum", n=5, payload=self.payload.to_dict())

    def test_schema_version(self):
        self.assertEqual(self.record.schema_version, SCHEMA_VERSION)
        self.assertEqual(json.loads(self.record.to_json())["schema_version"], "1.0")

    def test_json_has_sorted_keys(self):
        text = self.record.to_json()
        keys = list(json.loads(text))
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(text, self.record.to_json())

    def test_json_round_trip(self):
        parsed = from_json(self.record.to_json())
        self.assertEqual(parsed, self.record)
        self.assertEqual(SpectrumPayload.from_dict(parsed.payload), self.payload)

    def test_big_counts_are_strings(self):
        payload = ChiPayload(a=FractionRecord(1, 2), chi=str(-2 ** 1000),
                             position=PositionRecord(kind="interval", interval=7))
        data = json.loads(OutputRecord(command="chi", n=2001, payload=payload.to_dict()).to_json())
        self.assertEqual(int(data["payload"]["chi"]), -2 ** 1000)
        self.assertIsNone(data["payload"]["position"]["value"])

    def test_verify_payload(self):
        payload = VerifyPayload(n_max=9, oracle_max=5, passed=False,
                                checks=[CheckRecord(name="euler.ascent", passed=False, cases=4,
                                                    detail="n=5: ascent ends at 2")])
        self.assertEqual(VerifyPayload.from_dict(payload.to_dict()), payload)


if __name__ == '__main__':
    unittest.main()

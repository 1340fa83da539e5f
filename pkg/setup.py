# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import setuptools


def get_version():
    return "0.1.0"


setuptools.setup(
    version=get_version(),
)

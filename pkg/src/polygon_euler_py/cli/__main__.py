# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import sys

from . import main

if __name__ == "__main__":
    sys.exit(main())

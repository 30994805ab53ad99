#!/usr/bin/env python3

import logdp

if __name__ == "__main__":
    logdp.main()

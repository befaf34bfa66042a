#! /usr/bin/env python3

import sys
from weylext import commandline

if __name__ == '__main__':
    commandline.main(sys.argv)

#!/usr/bin/env python3
# Copyright 2026 The divtcp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Prints a method/instruction listing of class files using javatools.

The output is committed as tests/fixtures/golden/*.listing and compared
against the listing produced by the C++ parser (tests/classfile_test.cc).
javatools is a separate, Python-only class-file reader, so the comparison is
an independent check of both the class parser and the bytecode decoder.

Usage: pip install javatools; golden_listing.py CLASSFILE...
"""

import sys

from javatools import unpack_classfile
from javatools import opcodes


def describe(offset, code, args):
    if code == opcodes.OP_wide:
        inner = args[0]
        return '%d wide %s' % (offset, opcodes.get_opname_by_code(inner))
    return '%d %s' % (offset, opcodes.get_opname_by_code(code))


def listing(path):
    info = unpack_classfile(path)
    lines = ['class %s version %d.%d' % (info.get_this(), info.version[0],
                                         info.version[1])]
    for method in info.methods:
        annotations = [a.pretty_type() for a in (method.get_annotations() or ())]
        code = method.get_code()
        header = 'method %s%s flags 0x%04x' % (method.get_name(), method.get_descriptor(),
                                             method.access_flags)
        if code is None:
            lines.append(header + ' abstract')
        else:
            lines.append(header + ' code %d' % len(code.code))
        for annotation in annotations:
            lines.append('  @%s' % annotation)
        if code is not None:
            for offset, op, args in code.disassemble():
                lines.append('  ' + describe(offset, op, args))
    return lines


def main():
    for path in sys.argv[1:]:
        print('\n'.join(listing(path)))


if __name__ == '__main__':
    main()

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
"""Writes the committed .class fixtures under tests/fixtures/classes.

The build sandbox has no Java compiler, so the fixtures are assembled here
instruction by instruction.  The three BigFraction tests reproduce javac 8
output for the Commons Math tests byte for byte in the code arrays, including
the constant-pool indices javac assigned (#8 BigFraction, #13 "-1 / 2", ...).
Everything else (line tables, local variable tables, annotations, fields) is
laid out the way javac -g lays it out.

Usage: make_fixtures.py OUTPUT_DIR
"""

import os
import struct
import sys

ACC_PUBLIC = 0x0001
ACC_PRIVATE = 0x0002
ACC_STATIC = 0x0008
ACC_FINAL = 0x0010
ACC_SUPER = 0x0020
ACC_ABSTRACT = 0x0400

# name -> (opcode, operand format).  Formats: '' none, 'b' s1, 'B' u1 local,
# 'h' s2, 'cp1' u1 pool index, 'cp2' u2 pool index, 'br2'/'br4' branch,
# plus a few special cases handled in assemble().
OPS = {
    'nop': (0x00, ''), 'aconst_null': (0x01, ''), 'iconst_m1': (0x02, ''),
    'iconst_0': (0x03, ''), 'iconst_1': (0x04, ''), 'iconst_2': (0x05, ''),
    'iconst_3': (0x06, ''), 'lconst_0': (0x09, ''), 'dconst_0': (0x0E, ''),
    'bipush': (0x10, 'b'), 'sipush': (0x11, 'h'), 'ldc': (0x12, 'cp1'),
    'ldc_w': (0x13, 'cp2'), 'ldc2_w': (0x14, 'cp2'), 'iload': (0x15, 'B'),
    'aload': (0x19, 'B'), 'iload_0': (0x1A, ''), 'iload_1': (0x1B, ''),
    'lload_2': (0x20, ''), 'aload_0': (0x2A, ''), 'aload_1': (0x2B, ''),
    'aload_2': (0x2C, ''), 'aload_3': (0x2D, ''), 'iaload': (0x2E, ''),
    'istore': (0x36, 'B'), 'istore_1': (0x3C, ''), 'lstore_2': (0x41, ''),
    'astore': (0x3A, 'B'), 'astore_1': (0x4C, ''), 'astore_2': (0x4D, ''),
    'astore_3': (0x4E, ''), 'iastore': (0x4F, ''), 'pop': (0x57, ''),
    'dup': (0x59, ''), 'iadd': (0x60, ''), 'ladd': (0x61, ''),
    'iinc': (0x84, 'iinc'), 'i2l': (0x85, ''), 'ifeq': (0x99, 'br2'),
    'if_icmpge': (0xA2, 'br2'), 'goto': (0xA7, 'br2'),
    'tableswitch': (0xAA, 'tableswitch'), 'lookupswitch': (0xAB, 'lookupswitch'),
    'ireturn': (0xAC, ''), 'lreturn': (0xAD, ''), 'return': (0xB1, ''),
    'getstatic': (0xB2, 'cp2'), 'putstatic': (0xB3, 'cp2'), 'getfield': (0xB4, 'cp2'),
    'putfield': (0xB5, 'cp2'), 'invokevirtual': (0xB6, 'cp2'),
    'invokespecial': (0xB7, 'cp2'), 'invokestatic': (0xB8, 'cp2'),
    'invokeinterface': (0xB9, 'invokeinterface'),
    'invokedynamic': (0xBA, 'invokedynamic'), 'new': (0xBB, 'cp2'),
    'newarray': (0xBC, 'B'), 'anewarray': (0xBD, 'cp2'),
    'arraylength': (0xBE, ''), 'athrow': (0xBF, ''), 'checkcast': (0xC0, 'cp2'),
    'instanceof': (0xC1, 'cp2'), 'wide': (0xC4, 'wide'),
    'multianewarray': (0xC5, 'multianewarray'), 'ifnull': (0xC6, 'br2'),
    'goto_w': (0xC8, 'br4'),
}


def u1(v):
    return struct.pack('>B', v)


def u2(v):
    return struct.pack('>H', v)


def u4(v):
    return struct.pack('>I', v)


class Pool:
    """Constant pool with optional pinned slots."""

    WIDE = ('Long', 'Double')

    def __init__(self, pinned=None):
        self.slots = {}
        self.index_of = {}
        for index, entry in (pinned or {}).items():
            self._place(index, entry)
        for entry in list(self.slots.values()):
            if entry is not None:
                self._resolve(entry)

    def _place(self, index, entry):
        assert index not in self.slots, index
        self.slots[index] = entry
        self.index_of[entry] = index
        if entry[0] in self.WIDE:
            assert index + 1 not in self.slots
            self.slots[index + 1] = None

    def _children(self, entry):
        kind = entry[0]
        if kind in ('Class', 'String', 'MethodType'):
            return [('Utf8', entry[1])]
        if kind in ('Fieldref', 'Methodref', 'InterfaceMethodref'):
            return [('Class', entry[1]), ('NameAndType', entry[2], entry[3])]
        if kind == 'NameAndType':
            return [('Utf8', entry[1]), ('Utf8', entry[2])]
        if kind == 'MethodHandle':
            return [entry[2]]
        if kind == 'InvokeDynamic':
            return [('NameAndType', entry[2], entry[3])]
        return []

    def _resolve(self, entry):
        for child in self._children(entry):
            self.get(child)

    def get(self, entry):
        if entry in self.index_of:
            return self.index_of[entry]
        for child in self._children(entry):
            self.get(child)
        index = 1
        width = 2 if entry[0] in self.WIDE else 1
        while any(index + k in self.slots for k in range(width)):
            index += 1
        self._place(index, entry)
        return index

    def utf8(self, text):
        return self.get(('Utf8', text))

    def serialize(self):
        count = max(self.slots) + 1
        out = bytearray(u2(count))
        index = 1
        while index < count:
            entry = self.slots.get(index)
            assert entry is not None, 'pool gap at #%d' % index
            kind = entry[0]
            if kind == 'Utf8':
                data = entry[1].encode('utf-8')
                out += u1(1) + u2(len(data)) + data
            elif kind == 'Integer':
                out += u1(3) + struct.pack('>i', entry[1])
            elif kind == 'Long':
                out += u1(5) + struct.pack('>q', entry[1])
            elif kind == 'Double':
                out += u1(6) + struct.pack('>d', entry[1])
            elif kind == 'Class':
                out += u1(7) + u2(self.get(('Utf8', entry[1])))
            elif kind == 'String':
                out += u1(8) + u2(self.get(('Utf8', entry[1])))
            elif kind in ('Fieldref', 'Methodref', 'InterfaceMethodref'):
                tag = {'Fieldref': 9, 'Methodref': 10, 'InterfaceMethodref': 11}[kind]
                out += (u1(tag) + u2(self.get(('Class', entry[1]))) +
                        u2(self.get(('NameAndType', entry[2], entry[3]))))
            elif kind == 'NameAndType':
                out += u1(12) + u2(self.utf8(entry[1])) + u2(self.utf8(entry[2]))
            elif kind == 'MethodHandle':
                out += u1(15) + u1(entry[1]) + u2(self.get(entry[2]))
            elif kind == 'MethodType':
                out += u1(16) + u2(self.utf8(entry[1]))
            elif kind == 'InvokeDynamic':
                out += (u1(18) + u2(entry[1]) +
                        u2(self.get(('NameAndType', entry[2], entry[3]))))
            else:
                raise ValueError(kind)
            index += 2 if kind in self.WIDE else 1
        return bytes(out)


def assemble(pool, program):
    """Assembles [(label or None, op, *args)] into (code bytes, label map)."""

    def encode(pos, op, args, labels):
        code, fmt = OPS[op]
        out = bytearray(u1(code))
        if fmt == '':
            pass
        elif fmt == 'b':
            out += struct.pack('>b', args[0])
        elif fmt == 'B':
            out += u1(args[0])
        elif fmt == 'h':
            out += struct.pack('>h', args[0])
        elif fmt == 'cp1':
            index = pool.get(args[0])
            assert index < 256
            out += u1(index)
        elif fmt == 'cp2':
            out += u2(pool.get(args[0]))
        elif fmt == 'br2':
            out += struct.pack('>h', labels.get(args[0], pos) - pos)
        elif fmt == 'br4':
            out += struct.pack('>i', labels.get(args[0], pos) - pos)
        elif fmt == 'iinc':
            out += u1(args[0]) + struct.pack('>b', args[1])
        elif fmt == 'wide':
            inner = OPS[args[0]][0]
            out += u1(inner) + u2(args[1])
            if args[0] == 'iinc':
                out += struct.pack('>h', args[2])
        elif fmt == 'multianewarray':
            out += u2(pool.get(args[0])) + u1(args[1])
        elif fmt == 'invokeinterface':
            out += u2(pool.get(args[0])) + u1(args[1]) + u1(0)
        elif fmt == 'invokedynamic':
            out += u2(pool.get(args[0])) + u2(0)
        elif fmt in ('tableswitch', 'lookupswitch'):
            out += b'\x00' * ((4 - (pos + 1) % 4) % 4)
            default = labels.get(args[0], pos) - pos
            if fmt == 'tableswitch':
                low, high, targets = args[1], args[2], args[3]
                out += struct.pack('>iii', default, low, high)
                for target in targets:
                    out += struct.pack('>i', labels.get(target, pos) - pos)
            else:
                pairs = args[1]
                out += struct.pack('>ii', default, len(pairs))
                for key, target in pairs:
                    out += struct.pack('>ii', key, labels.get(target, pos) - pos)
        else:
            raise ValueError(fmt)
        return bytes(out)

    labels = {}
    for _ in range(2):
        pos = 0
        code = bytearray()
        for label, op, *args in program:
            if label is not None:
                labels[label] = pos
            chunk = encode(pos, op, args, labels)
            code += chunk
            pos += len(chunk)
    return bytes(code), labels


def attribute(pool, name, body):
    return u2(pool.utf8(name)) + u4(len(body)) + body


def element_value(pool, value):
    tag = value[0]
    if tag == 'J':
        return b'J' + u2(pool.get(('Long', value[1])))
    if tag == 's':
        return b's' + u2(pool.utf8(value[1]))
    if tag == '@':
        return b'@' + annotation(pool, value[1], value[2])
    if tag == '[':
        body = u2(len(value[1]))
        for item in value[1]:
            body += element_value(pool, item)
        return b'[' + body
    raise ValueError(tag)


def annotation(pool, type_desc, pairs):
    out = u2(pool.utf8(type_desc)) + u2(len(pairs))
    for name, value in pairs:
        out += u2(pool.utf8(name)) + element_value(pool, value)
    return out


class Method:
    def __init__(self, access, name, desc, program=None, max_stack=0,
                 max_locals=0, annotations=(), lines=(), local_vars=()):
        self.access = access
        self.name = name
        self.desc = desc
        self.program = program
        self.max_stack = max_stack
        self.max_locals = max_locals
        self.annotations = annotations
        self.lines = lines
        self.local_vars = local_vars


def build_class(pool, this_name, methods, fields=(), access=ACC_PUBLIC | ACC_SUPER,
                source='', major=52, bootstrap=None):
    this_index = pool.get(('Class', this_name))
    super_index = pool.get(('Class', 'java/lang/Object'))

    method_blobs = []
    for m in methods:
        attrs = []
        if m.program is not None:
            code, labels = assemble(pool, m.program)
            sub = []
            if m.lines:
                body = u2(len(m.lines))
                for label, line in m.lines:
                    body += u2(labels[label]) + u2(line)
                sub.append(attribute(pool, 'LineNumberTable', body))
            if m.local_vars:
                body = u2(len(m.local_vars))
                for start, name, desc, slot in m.local_vars:
                    begin = labels[start]
                    body += (u2(begin) + u2(len(code) - begin) + u2(pool.utf8(name)) +
                             u2(pool.utf8(desc)) + u2(slot))
                sub.append(attribute(pool, 'LocalVariableTable', body))
            body = (u2(m.max_stack) + u2(m.max_locals) + u4(len(code)) + code +
                    u2(0) + u2(len(sub)) + b''.join(sub))
            attrs.append(attribute(pool, 'Code', body))
        if m.annotations:
            body = u2(len(m.annotations))
            for type_desc, pairs in m.annotations:
                body += annotation(pool, type_desc, pairs)
            attrs.append(attribute(pool, 'RuntimeVisibleAnnotations', body))
        method_blobs.append(u2(m.access) + u2(pool.utf8(m.name)) +
                            u2(pool.utf8(m.desc)) + u2(len(attrs)) + b''.join(attrs))

    field_blobs = []
    for f_access, f_name, f_desc, constant in fields:
        attrs = []
        if constant is not None:
            attrs.append(attribute(pool, 'ConstantValue', u2(pool.get(constant))))
        field_blobs.append(u2(f_access) + u2(pool.utf8(f_name)) + u2(pool.utf8(f_desc)) +
                           u2(len(attrs)) + b''.join(attrs))

    class_attrs = []
    if source:
        class_attrs.append(attribute(pool, 'SourceFile', u2(pool.utf8(source))))
    if bootstrap:
        body = u2(len(bootstrap))
        for handle, arguments in bootstrap:
            body += u2(pool.get(handle)) + u2(len(arguments))
            for argument in arguments:
                body += u2(pool.get(argument))
        class_attrs.append(attribute(pool, 'BootstrapMethods', body))

    out = bytearray(b'\xCA\xFE\xBA\xBE' + u2(0) + u2(major))
    out += pool.serialize()
    out += u2(access) + u2(this_index) + u2(super_index) + u2(0)
    out += u2(len(field_blobs)) + b''.join(field_blobs)
    out += u2(len(method_blobs)) + b''.join(method_blobs)
    out += u2(len(class_attrs)) + b''.join(class_attrs)
    return bytes(out)


# --- BigFraction fixtures --------------------------------------------------

PKG = 'org/apache/commons/math3/fraction/'
BIG_FRACTION = PKG + 'BigFraction'
FORMAT = PKG + 'BigFractionFormat'
FORMAT_DESC = 'L' + FORMAT + ';'
ASSERT = 'org/junit/Assert'
OBJECT_DESC = 'Ljava/lang/Object;'
STRING_DESC = 'Ljava/lang/String;'
TEST = ('Lorg/junit/Test;', ())
BEFORE = ('Lorg/junit/Before;', ())


def fraction_refs(owner):
    return {
        'proper': ('Fieldref', owner, 'properFormat', FORMAT_DESC),
        'improper': ('Fieldref', owner, 'improperFormat', FORMAT_DESC),
        'fraction': ('Class', BIG_FRACTION),
        'fraction_init': ('Methodref', BIG_FRACTION, '<init>', '(II)V'),
        'format': ('Methodref', FORMAT, 'format', '(' + OBJECT_DESC + ')' + STRING_DESC),
        'assert_objects': ('Methodref', ASSERT, 'assertEquals',
                           '(' + OBJECT_DESC + OBJECT_DESC + ')V'),
        'neg_text': ('String', '-1 / 2'),
        'zero_text': ('String', '0 / 1'),
        'parse': ('Methodref', FORMAT, 'parse',
                  '(' + STRING_DESC + ')L' + BIG_FRACTION + ';'),
        'big_text': ('String', '16721... / 532255...'),
        'pi': ('Double', 3.141592653589793),
        'double_value': ('Methodref', BIG_FRACTION, 'doubleValue', '()D'),
        'assert_doubles': ('Methodref', ASSERT, 'assertEquals', '(DDD)V'),
        'proper_text': ('String', '3 75363... / 53225...'),
        'decimal': ('Class', 'java/math/BigDecimal'),
        'decimal_text': ('String', '3.14159...'),
        'decimal_init': ('Methodref', 'java/math/BigDecimal', '<init>',
                         '(' + STRING_DESC + ')V'),
        'decimal_value': ('Methodref', BIG_FRACTION, 'bigDecimalValue',
                          '(II)Ljava/math/BigDecimal;'),
    }


def format_test(r, name, first, second, text_ref, line, local_names):
    program = [
        ('L0', 'new', r['fraction']),
        (None, 'dup'),
        (None, first),
        (None, second),
        (None, 'invokespecial', r['fraction_init']),
        (None, 'astore_1'),
        ('L1', 'ldc', r[text_ref]),
        (None, 'astore_2'),
        ('L2', 'aload_0'),
        (None, 'getfield', r['proper']),
        (None, 'aload_1'),
        (None, 'invokevirtual', r['format']),
        (None, 'astore_3'),
        ('L3', 'aload_2'),
        (None, 'aload_3'),
        (None, 'invokestatic', r['assert_objects']),
        ('L4', 'aload_0'),
        (None, 'getfield', r['improper']),
        (None, 'aload_1'),
        (None, 'invokevirtual', r['format']),
        (None, 'astore_3'),
        ('L5', 'aload_2'),
        (None, 'aload_3'),
        (None, 'invokestatic', r['assert_objects']),
        ('L6', 'return'),
    ]
    lines = [('L0', line[0]), ('L1', line[1]), ('L2', line[2]), ('L3', line[3]),
             ('L4', line[4]), ('L5', line[5]), ('L6', line[6])]
    this_name, fraction_name, expected_name = local_names
    local_vars = [('L0', 'this', None, 0), ('L1', fraction_name, 'L' + BIG_FRACTION + ';', 1),
                  ('L2', expected_name, STRING_DESC, 2), ('L3', 'actual', STRING_DESC, 3)]
    return Method(ACC_PUBLIC, name, '()V', program, max_stack=4, max_locals=4,
                  annotations=[TEST], lines=lines, local_vars=local_vars)


def common_members(r, owner):
    init = Method(ACC_PUBLIC, '<init>', '()V', [
        ('L0', 'aload_0'),
        (None, 'invokespecial', ('Methodref', 'java/lang/Object', '<init>', '()V')),
        (None, 'return'),
    ], max_stack=1, max_locals=1, lines=[('L0', 30)],
        local_vars=[('L0', 'this', 'L' + owner + ';', 0)])
    locale_us = ('Fieldref', 'java/util/Locale', 'US', 'Ljava/util/Locale;')
    set_up = Method(ACC_PUBLIC, 'setUp', '()V', [
        ('L0', 'aload_0'),
        (None, 'getstatic', locale_us),
        (None, 'invokestatic', ('Methodref', FORMAT, 'getProperInstance',
                                '(Ljava/util/Locale;)' + FORMAT_DESC)),
        (None, 'putfield', r['proper']),
        ('L1', 'aload_0'),
        (None, 'getstatic', locale_us),
        (None, 'invokestatic', ('Methodref', FORMAT, 'getImproperInstance',
                                '(Ljava/util/Locale;)' + FORMAT_DESC)),
        (None, 'putfield', r['improper']),
        ('L2', 'return'),
    ], max_stack=2, max_locals=1, annotations=[BEFORE],
        lines=[('L0', 37), ('L1', 38), ('L2', 39)],
        local_vars=[('L0', 'this', 'L' + owner + ';', 0)])
    fields = [(0, 'properFormat', FORMAT_DESC, None),
              (0, 'improperFormat', FORMAT_DESC, None)]
    return init, set_up, fields


def fix_this_desc(methods, owner):
    for m in methods:
        m.local_vars = [(s, n, d if d is not None else 'L' + owner + ';', slot)
                        for s, n, d, slot in m.local_vars]


def big_fraction_format_test():
    owner = PKG + 'BigFractionFormatTest'
    r = fraction_refs(owner)
    pool = Pool({
        2: r['proper'], 3: r['improper'], 8: r['fraction'], 9: r['fraction_init'],
        11: r['format'], 12: r['assert_objects'], 13: r['neg_text'],
        14: r['zero_text'], 19: r['parse'], 50: r['big_text'], 52: r['pi'],
        54: r['double_value'], 55: r['assert_doubles'], 56: r['proper_text'],
        57: r['decimal'], 58: r['decimal_text'], 59: r['decimal_init'],
        60: r['decimal_value'],
    })
    init, set_up, fields = common_members(r, owner)
    parse_big = Method(ACC_PUBLIC, 'testParseBig', '()V', [
        ('L0', 'aload_0'),
        (None, 'getfield', r['improper']),
        (None, 'ldc', r['big_text']),
        (None, 'invokevirtual', r['parse']),
        (None, 'astore_1'),
        ('L1', 'ldc2_w', r['pi']),
        (None, 'aload_1'),
        (None, 'invokevirtual', r['double_value']),
        (None, 'dconst_0'),
        (None, 'invokestatic', r['assert_doubles']),
        ('L2', 'aload_0'),
        (None, 'getfield', r['proper']),
        (None, 'ldc', r['proper_text']),
        (None, 'invokevirtual', r['parse']),
        (None, 'astore_2'),
        ('L3', 'ldc2_w', r['pi']),
        (None, 'aload_2'),
        (None, 'invokevirtual', r['double_value']),
        (None, 'dconst_0'),
        (None, 'invokestatic', r['assert_doubles']),
        ('L4', 'aload_1'),
        (None, 'aload_2'),
        (None, 'invokestatic', r['assert_objects']),
        ('L5', 'new', r['decimal']),
        (None, 'dup'),
        (None, 'ldc', r['decimal_text']),
        (None, 'invokespecial', r['decimal_init']),
        (None, 'astore_3'),
        ('L6', 'aload_3'),
        (None, 'aload_1'),
        (None, 'bipush', 99),
        (None, 'bipush', 6),
        (None, 'invokevirtual', r['decimal_value']),
        (None, 'invokestatic', r['assert_objects']),
        ('L7', 'return'),
    ], max_stack=7, max_locals=4, annotations=[TEST],
        lines=[('L0', 287), ('L1', 289), ('L2', 290), ('L3', 292), ('L4', 293),
               ('L5', 294), ('L6', 295), ('L7', 296)],
        local_vars=[('L0', 'this', None, 0),
                    ('L1', 'f1', 'L' + BIG_FRACTION + ';', 1),
                    ('L3', 'f2', 'L' + BIG_FRACTION + ';', 2),
                    ('L6', 'pi', 'Ljava/math/BigDecimal;', 3)])
    negative = format_test(r, 'testFormatNegative', 'iconst_m1', 'iconst_2', 'neg_text',
                           (96, 97, 99, 100, 102, 103, 104), ('this', 'c', 'expected'))
    zero = format_test(r, 'testFormatZero', 'iconst_0', 'iconst_1', 'zero_text',
                       (107, 108, 110, 111, 113, 114, 115), ('this', 'c', 'expected'))
    methods = [init, set_up, parse_big, negative, zero]
    fix_this_desc(methods, owner)
    return build_class(pool, owner, methods, fields, source='BigFractionFormatTest.java')


def big_fraction_format_variant_test():
    # Same test body as testFormatZero, different local names and comment
    # lines (so different line numbers); javac allocates the pool freshly.
    owner = PKG + 'BigFractionFormatVariantTest'
    r = fraction_refs(owner)
    pool = Pool()
    init, set_up, fields = common_members(r, owner)
    zero = format_test(r, 'testFormatZero', 'iconst_0', 'iconst_1', 'zero_text',
                       (107, 108, 110, 113, 114, 116, 117),
                       ('this', 'bigFraction', 'output'))
    methods = [init, set_up, zero]
    fix_this_desc(methods, owner)
    return build_class(pool, owner, methods, fields,
                       source='BigFractionFormatVariantTest.java')


# --- Decoder coverage fixtures ---------------------------------------------

def bytecode_shapes():
    owner = 'org/example/BytecodeShapes'
    pool = Pool()
    init = Method(ACC_PUBLIC, '<init>', '()V', [
        ('L0', 'aload_0'),
        (None, 'invokespecial', ('Methodref', 'java/lang/Object', '<init>', '()V')),
        (None, 'return'),
    ], max_stack=1, max_locals=1)
    classify = Method(ACC_PUBLIC | ACC_STATIC, 'classify', '(I)I', [
        (None, 'iload_0'),
        (None, 'tableswitch', 'Ldef', 1, 3, ['Lone', 'Ltwo', 'Lbig']),
        ('Lone', 'iconst_1'),
        (None, 'ireturn'),
        ('Ltwo', 'iconst_2'),
        (None, 'ireturn'),
        ('Lbig', 'iload_0'),
        (None, 'lookupswitch', 'Ldef', [(10, 'Lten'), (1000, 'Lthousand')]),
        ('Lten', 'sipush', 300),
        (None, 'ireturn'),
        ('Lthousand', 'ldc_w', ('Integer', 100000)),
        (None, 'ireturn'),
        ('Ldef', 'iconst_m1'),
        (None, 'ireturn'),
    ], max_stack=1, max_locals=1)
    locals_method = Method(ACC_PRIVATE | ACC_STATIC, 'manyLocals', '()J', [
        (None, 'iconst_0'),
        (None, 'wide', 'istore', 300),
        (None, 'wide', 'iinc', 300, 1000),
        (None, 'iinc', 1, -1),
        ('Lloop', 'wide', 'iload', 300),
        (None, 'bipush', -5),
        (None, 'if_icmpge', 'Lout'),
        (None, 'iconst_3'),
        (None, 'newarray', 10),
        (None, 'arraylength'),
        (None, 'pop'),
        (None, 'iconst_2'),
        (None, 'iconst_3'),
        (None, 'multianewarray', ('Class', '[[I'), 2),
        (None, 'checkcast', ('Class', '[[I')),
        (None, 'instanceof', ('Class', '[Ljava/lang/Object;')),
        (None, 'ifeq', 'Lloop'),
        (None, 'aconst_null'),
        (None, 'ifnull', 'Lout'),
        (None, 'goto_w', 'Lloop'),
        ('Lout', 'ldc2_w', ('Long', 1 << 40)),
        (None, 'lstore_2'),
        (None, 'lload_2'),
        (None, 'iconst_1'),
        (None, 'i2l'),
        (None, 'ladd'),
        (None, 'lreturn'),
    ], max_stack=4, max_locals=302)

    runnable = ('InterfaceMethodref', 'java/lang/Runnable', 'run', '()V')
    metafactory = ('MethodHandle', 6, (
        'Methodref', 'java/lang/invoke/LambdaMetafactory', 'metafactory',
        '(Ljava/lang/invoke/MethodHandles$Lookup;Ljava/lang/String;'
        'Ljava/lang/invoke/MethodType;Ljava/lang/invoke/MethodType;'
        'Ljava/lang/invoke/MethodHandle;Ljava/lang/invoke/MethodType;)'
        'Ljava/lang/invoke/CallSite;'))
    lambda_body = ('MethodHandle', 6, ('Methodref', owner, 'lambda$0', '()V'))
    timeout_test = Method(ACC_PUBLIC, 'testWithTimeout', '()V', [
        (None, 'invokedynamic', ('InvokeDynamic', 0, 'run', '()Ljava/lang/Runnable;')),
        (None, 'astore_1'),
        (None, 'aload_1'),
        (None, 'invokeinterface', runnable, 1),
        (None, 'getstatic', ('Fieldref', owner, 'COUNTER', 'I')),
        (None, 'iconst_1'),
        (None, 'iadd'),
        (None, 'putstatic', ('Fieldref', owner, 'COUNTER', 'I')),
        (None, 'return'),
    ], max_stack=2, max_locals=2,
        annotations=[('Lorg/junit/Test;', [('timeout', ('J', 1000))])])
    jupiter = Method(0, 'jupiterCase', '()V', [
        (None, 'aconst_null'),
        (None, 'anewarray', ('Class', 'java/lang/String')),
        (None, 'pop'),
        (None, 'return'),
    ], max_stack=1, max_locals=1, annotations=[
        ('Lorg/junit/jupiter/api/Test;', ()),
        ('Lorg/junit/jupiter/api/Tags;', [('value', ('[', [
            ('@', 'Lorg/junit/jupiter/api/Tag;', [('value', ('s', 'fast'))]),
            ('@', 'Lorg/junit/jupiter/api/Tag;', [('value', ('s', 'slow'))]),
        ]))]),
    ])
    legacy = Method(ACC_PUBLIC, 'testLegacyStyle', '()V', [
        (None, 'iconst_1'),
        (None, 'istore_1'),
        (None, 'iload_1'),
        (None, 'iload_1'),
        (None, 'iadd'),
        (None, 'istore', 1),
        (None, 'return'),
    ], max_stack=2, max_locals=2)
    lambda_method = Method(ACC_PRIVATE | ACC_STATIC | 0x1000, 'lambda$0', '()V', [
        (None, 'return'),
    ], max_stack=0, max_locals=0)
    fields = [(ACC_PUBLIC | ACC_STATIC, 'COUNTER', 'I', None),
              (ACC_PUBLIC | ACC_STATIC | ACC_FINAL, 'LIMIT', 'J', ('Long', 42))]
    bootstrap = [(metafactory, [('MethodType', '()V'), lambda_body,
                                ('MethodType', '()V')])]
    methods = [init, classify, locals_method, timeout_test, jupiter, legacy, lambda_method]
    return build_class(pool, owner, methods, fields, source='BytecodeShapes.java',
                       bootstrap=bootstrap)


def abstract_only_test():
    owner = 'org/example/AbstractOnlyTest'
    pool = Pool()
    method = Method(ACC_PUBLIC | ACC_ABSTRACT, 'testAbstract', '()V', annotations=[TEST])
    return build_class(pool, owner, [method], access=ACC_PUBLIC | ACC_SUPER | ACC_ABSTRACT,
                       source='AbstractOnlyTest.java')


def overloaded_test():
    owner = 'org/example/OverloadedTest'
    pool = Pool()
    plain = Method(ACC_PUBLIC, 'testValue', '()V', [(None, 'return')],
                   max_stack=0, max_locals=1, annotations=[TEST])
    with_arg = Method(ACC_PUBLIC, 'testValue', '(I)V', [
        (None, 'iload_1'),
        (None, 'pop'),
        (None, 'return'),
    ], max_stack=1, max_locals=2, annotations=[TEST])
    return build_class(pool, owner, [plain, with_arg], source='OverloadedTest.java')


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    root = sys.argv[1]
    outputs = {
        'fig2/BigFractionFormatTest.class': big_fraction_format_test(),
        'fig2-variant/BigFractionFormatVariantTest.class': big_fraction_format_variant_test(),
        'shapes/BytecodeShapes.class': bytecode_shapes(),
        'abstract/AbstractOnlyTest.class': abstract_only_test(),
        'overloaded/OverloadedTest.class': overloaded_test(),
    }
    for rel, data in outputs.items():
        path = os.path.join(root, rel)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, 'wb') as f:
            f.write(data)
        print('%s: %d bytes' % (rel, len(data)))


if __name__ == '__main__':
    main()

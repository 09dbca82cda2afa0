"""Edge lists, repeating blocks and status witnesses of the construction families (generated data)."""

PATTERN_DATA = [
    dict(
        family='T', residue=0, order=18, black='c3', copies_per_period=1,
        block=['a3', 'a4', 'b3', 'b4', 'c3', 'c4'],
        boundary={'a2': 'a4', 'b2': 'b4', 'c2': 'c4'},
        odd_witness=('c3', 0), even_witness=('b3', 0), zero_witness='b5',
        edges="a1-a2 a1-b1 a1-b2 a1-c1 a2-a3 a2-b2 a2-b3 a2-c1 a2-c2 a3-a4 a3-b3 a3-b4 a3-c2 a3-c3 a4-a5 a4-b4 a4-b5 a4-c3 a4-c4 a5-a6 a5-b5 a5-b6 a5-c4 a5-c5 a6-b6 a6-c5 a6-c6 b1-b2 b1-c1 b2-b3 b2-c1 b2-c2 b3-b4 b3-c2 b3-c3 b4-b5 b4-c3 b4-c4 b5-b6 b5-c4 b5-c5 b6-c5 b6-c6 c1-c2 c2-c3 c3-c4 c4-c5 c5-c6",
    ),
    dict(
        family='T', residue=1, order=19, black='c3', copies_per_period=1,
        block=['a3', 'a4', 'b3', 'b4', 'c3', 'c4'],
        boundary={'a2': 'a4', 'b2': 'b4', 'c2': 'c4'},
        odd_witness=('c3', 0), even_witness=('c4', -1), zero_witness='c2',
        edges="a1-a2 a1-b1 a1-b2 a1-c0 a1-c1 a2-a3 a2-b2 a2-b3 a2-c1 a2-c2 a3-a4 a3-b3 a3-b4 a3-c2 a3-c3 a4-a5 a4-b4 a4-b5 a4-c3 a4-c4 a5-a6 a5-b5 a5-b6 a5-c4 a5-c5 a6-b6 a6-c5 a6-c6 b1-b2 b1-c0 b1-c1 b2-b3 b2-c1 b2-c2 b3-b4 b3-c2 b3-c3 b4-b5 b4-c3 b4-c4 b5-b6 b5-c4 b5-c5 b6-c5 b6-c6 c0-c1 c1-c2 c2-c3 c3-c4 c4-c5 c5-c6",
    ),
    dict(
        family='T', residue=2, order=20, black='c3', copies_per_period=1,
        block=['a3', 'a4', 'b3', 'b4', 'c3', 'c4'],
        boundary={'a2': 'a4', 'b2': 'b4', 'c2': 'c4'},
        odd_witness=('c3', 0), even_witness=('a4', -1), zero_witness='a2',
        edges="a0-a1 a0-b1 a0-c0 a1-a2 a1-b1 a1-b2 a1-c0 a1-c1 a2-a3 a2-b2 a2-b3 a2-c1 a2-c2 a3-a4 a3-b3 a3-b4 a3-c2 a3-c3 a4-a5 a4-b4 a4-b5 a4-c3 a4-c4 a5-a6 a5-b5 a5-b6 a5-c4 a5-c5 a6-b6 a6-c5 a6-c6 b1-b2 b1-c0 b1-c1 b2-b3 b2-c1 b2-c2 b3-b4 b3-c2 b3-c3 b4-b5 b4-c3 b4-c4 b5-b6 b5-c4 b5-c5 b6-c5 b6-c6 c0-c1 c1-c2 c2-c3 c3-c4 c4-c5 c5-c6",
    ),
    dict(
        family='T', residue=3, order=21, black='c4', copies_per_period=1,
        block=['a4', 'a5', 'b4', 'b5', 'c4', 'c5'],
        boundary={'a3': 'a5', 'b3': 'b5', 'c3': 'c5'},
        odd_witness=('c4', 0), even_witness=('a5', -1), zero_witness='a3',
        edges="a1-a2 a1-b1 a1-b2 a1-c1 a2-a3 a2-b2 a2-b3 a2-c1 a2-c2 a3-a4 a3-b3 a3-b4 a3-c2 a3-c3 a4-a5 a4-b4 a4-b5 a4-c3 a4-c4 a5-a6 a5-b5 a5-b6 a5-c4 a5-c5 a6-a7 a6-b6 a6-b7 a6-c5 a6-c6 a7-b7 a7-c6 a7-c7 b1-b2 b1-c1 b2-b3 b2-c1 b2-c2 b3-b4 b3-c2 b3-c3 b4-b5 b4-c3 b4-c4 b5-b6 b5-c4 b5-c5 b6-b7 b6-c5 b6-c6 b7-c6 b7-c7 c1-c2 c2-c3 c3-c4 c4-c5 c5-c6 c6-c7",
    ),
    dict(
        family='T', residue=4, order=22, black='c4', copies_per_period=1,
        block=['a4', 'a5', 'b4', 'b5', 'c4', 'c5'],
        boundary={'a3': 'a5', 'b3': 'b5', 'c3': 'c5'},
        odd_witness=('c4', 0), even_witness=('c4', -1), zero_witness='a3',
        edges="a1-a2 a1-b1 a1-b2 a1-c0 a1-c1 a2-a3 a2-b2 a2-b3 a2-c1 a2-c2 a3-a4 a3-b3 a3-b4 a3-c2 a3-c3 a4-a5 a4-b4 a4-b5 a4-c3 a4-c4 a5-a6 a5-b5 a5-b6 a5-c4 a5-c5 a6-a7 a6-b6 a6-b7 a6-c5 a6-c6 a7-b7 a7-c6 a7-c7 b1-b2 b1-c0 b1-c1 b2-b3 b2-c1 b2-c2 b3-b4 b3-c2 b3-c3 b4-b5 b4-c3 b4-c4 b5-b6 b5-c4 b5-c5 b6-b7 b6-c5 b6-c6 b7-c6 b7-c7 c0-c1 c1-c2 c2-c3 c3-c4 c4-c5 c5-c6 c6-c7",
    ),
    dict(
        family='T', residue=5, order=23, black='c3', copies_per_period=1,
        block=['a4', 'a5', 'b4', 'b5', 'c4', 'c5'],
        boundary={'a3': 'a5', 'b3': 'b5', 'c3': 'c5'},
        odd_witness=('a4', 0), even_witness=('a5', -1), zero_witness='a3',
        edges="a0-a1 a0-b1 a0-c0 a1-a2 a1-b1 a1-b2 a1-c0 a1-c1 a2-a3 a2-b2 a2-b3 a2-c1 a2-c2 a3-a4 a3-b3 a3-b4 a3-c2 a3-c3 a4-a5 a4-b4 a4-b5 a4-c3 a4-c4 a5-a6 a5-b5 a5-b6 a5-c4 a5-c5 a6-a7 a6-b6 a6-b7 a6-c5 a6-c6 a7-b7 a7-c6 a7-c7 b1-b2 b1-c0 b1-c1 b2-b3 b2-c1 b2-c2 b3-b4 b3-c2 b3-c3 b4-b5 b4-c3 b4-c4 b5-b6 b5-c4 b5-c5 b6-b7 b6-c5 b6-c6 b7-c6 b7-c7 c0-c1 c1-c2 c2-c3 c3-c4 c4-c5 c5-c6 c6-c7",
    ),
    dict(
        family='T4', residue=2, order=18, black='b4', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('b4', 0), even_witness=('b1', 0), zero_witness='a4',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-e2 d2-d4 d2-e2 d3-d4 d3-e2 d4-e2",
    ),
    dict(
        family='T4', residue=3, order=19, black='c2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('c2', 0), even_witness=('b1', 0), zero_witness='a4',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-e2 d2-d4 d2-e2 d2-e3 d3-d4 d3-e2 d3-e3 d4-e3 e2-e3",
    ),
    dict(
        family='T4', residue=4, order=20, black='c2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('c2', 0), even_witness=('b1', 0), zero_witness='a4',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-e2 d2-d4 d2-e2 d2-e4 d3-d4 d3-e2 d3-e3 d4-e3 d4-e4 e2-e3 e2-e4 e3-e4",
    ),
    dict(
        family='T4', residue=5, order=21, black='c2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('c2', 0), even_witness=('b1', 0), zero_witness='a4',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-e2 d2-d4 d2-e2 d2-e3 d3-d4 d3-e2 d3-e4 d4-e3 d4-e4 d4-e5 e2-e3 e2-e4 e2-e5 e3-e5 e4-e5",
    ),
    dict(
        family='T4', residue=6, order=22, black='c2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('c2', 0), even_witness=('b2', 0), zero_witness='d2',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-f1 d2-d4 d2-f1 d2-f2 d3-d4 d3-f1 d3-f3 d4-f2 d4-f3 d4-f4 e2-f1 e2-f2 e2-f3 e2-f4 f1-f2 f1-f3 f2-f4 f3-f4",
    ),
    dict(
        family='T4', residue=7, order=23, black='c2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('c2', 0), even_witness=('b2', 0), zero_witness='d2',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-f1 d2-d4 d2-f1 d2-f2 d3-d4 d3-f1 d3-f3 d4-f2 d4-f3 d4-f4 e2-e3 e2-f1 e2-f2 e2-f3 e3-f2 e3-f3 e3-f4 f1-f2 f1-f3 f2-f4 f3-f4",
    ),
    dict(
        family='T4', residue=0, order=24, black='c2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('c2', 0), even_witness=('b2', 0), zero_witness='d2',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-f1 d2-d4 d2-f1 d2-f2 d3-d4 d3-f1 d3-f3 d4-f2 d4-f3 d4-f4 e2-e3 e2-e4 e2-f1 e2-f2 e2-f3 e3-e4 e3-f3 e3-f4 e4-f2 e4-f4 f1-f2 f1-f3 f2-f4 f3-f4",
    ),
    dict(
        family='T4', residue=1, order=25, black='c4', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'c1', 'c2', 'c3', 'c4'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4'},
        odd_witness=('c4', 0), even_witness=('b4', 0), zero_witness='d4',
        edges="a1-a2 a1-a3 a1-b1 a1-e1 a2-a4 a2-b1 a2-b2 a2-e1 a3-a4 a3-b1 a3-b3 a3-e1 a4-b2 a4-b3 a4-b4 a4-e1 b1-b2 b1-b3 b1-c1 b2-b4 b2-c1 b2-c2 b3-b4 b3-c1 b3-c3 b4-c2 b4-c3 b4-c4 c1-c2 c1-c3 c1-d1 c2-c4 c2-d1 c2-d2 c3-c4 c3-d1 c3-d3 c4-d2 c4-d3 c4-d4 d1-d2 d1-d3 d1-f1 d2-d4 d2-f1 d2-f2 d3-d4 d3-f1 d3-f3 d4-f2 d4-f3 d4-f4 e2-e3 e2-e4 e2-e5 e2-f1 e2-f2 e2-f3 e3-e5 e3-f2 e3-f4 e4-e5 e4-f3 e4-f4 e5-f4 f1-f2 f1-f3 f2-f4 f3-f4",
    ),
    dict(
        family='T5', residue=7, order=27, black='b3', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'c1', 'c2', 'c3', 'c4', 'c5'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4', 'a5': 'c5'},
        odd_witness=('b3', 0), even_witness=('c2', -1), zero_witness=None,
        edges="a1-a2 a1-a3 a1-b1 a1-b2 a1-b3 a1-s1 a1-s2 a2-a4 a2-b2 a2-b4 a2-s1 a2-s3 a3-a5 a3-b3 a3-b5 a3-s2 a3-s4 a4-a5 a4-b4 a4-b5 a4-s3 a4-s5 a5-b5 a5-s4 a5-s5 b1-b2 b1-b3 b1-c1 b1-c2 b1-c3 b2-b4 b2-c2 b2-c4 b3-b5 b3-c3 b3-c5 b4-b5 b4-c4 b4-c5 b5-c5 c1-c2 c1-c3 c1-d1 c1-d2 c2-c4 c2-d1 c2-d3 c3-c5 c3-d2 c3-d4 c4-c5 c4-d3 c4-d5 c5-d4 c5-d5 d1-d2 d1-d3 d1-z2 d2-d4 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1",
    ),
    dict(
        family='T5', residue=8, order=28, black='b2', copies_per_period=2,
        block=['b1', 'b2', 'b3', 'b4', 'b5'],
        boundary={'a1': 'b1', 'a2': 'b2', 'a3': 'b3', 'a4': 'b4', 'a5': 'b5'},
        odd_witness=('b2', 0), even_witness=('b1', -1), zero_witness=None,
        edges="a1-a2 a1-a3 a1-b1 a1-b2 a1-b3 a1-s1 a1-s2 a2-a4 a2-b2 a2-b4 a2-s1 a2-s3 a3-a5 a3-b3 a3-b5 a3-s2 a3-s4 a4-a5 a4-b4 a4-b5 a4-s3 a4-s5 a5-b5 a5-s4 a5-s5 b1-b2 b1-b3 b1-c1 b1-c2 b1-c3 b1-e1 b2-b4 b2-c2 b2-c4 b3-b5 b3-c3 b3-c5 b4-b5 b4-c4 b4-c5 b5-c5 c1-c3 c1-d1 c1-d3 c1-e1 c2-c4 c2-d2 c2-d4 c2-e1 c3-c5 c3-d3 c3-d5 c4-c5 c4-d4 c4-d5 c5-d5 d1-d2 d1-d3 d1-e1 d1-z2 d2-d4 d2-e1 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1",
    ),
    dict(
        family='T5', residue=9, order=29, black='b2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'c1', 'c2', 'c3', 'c4', 'c5'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'c3', 'a4': 'c4', 'a5': 'c5'},
        odd_witness=('b2', 0), even_witness=('c2', -1), zero_witness=None,
        edges="a1-a2 a1-a3 a1-b1 a1-b2 a1-b3 a1-s1 a1-s2 a2-a4 a2-b2 a2-b4 a2-s1 a2-s3 a3-a5 a3-b3 a3-b5 a3-s2 a3-s4 a4-a5 a4-b4 a4-b5 a4-s3 a4-s5 a5-b5 a5-s4 a5-s5 b1-b2 b1-b3 b1-c1 b1-c2 b1-c3 b2-b4 b2-c2 b2-c4 b3-b5 b3-c3 b3-c5 b4-b5 b4-c4 b4-c5 b5-c5 c1-c2 c1-c3 c1-d1 c1-d2 c1-e1 c2-c4 c2-d2 c2-d4 c3-c5 c3-e1 c3-e3 c4-c5 c4-d4 c4-d5 c4-e3 c5-e3 d1-d2 d1-d3 d1-e1 d1-z2 d2-d4 d2-z2 d3-d5 d3-e1 d3-e3 d3-z2 d4-d5 d4-z2 d5-e3 d5-z2 e1-e3 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1",
    ),
    dict(
        family='T5', residue=0, order=30, black='b2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'c2', 'c4', 'e1', 'e2', 'e3'],
        boundary={'a1': 'e1', 'a2': 'c2', 'a3': 'e2', 'a4': 'c4', 'a5': 'e3'},
        odd_witness=('b2', 0), even_witness=('c2', -1), zero_witness=None,
        edges="a1-a2 a1-a3 a1-b1 a1-b3 a1-s1 a1-s2 a2-a4 a2-b1 a2-b2 a2-b4 a2-s1 a2-s3 a3-a5 a3-b3 a3-b5 a3-s2 a3-s4 a4-a5 a4-b4 a4-b5 a4-s3 a4-s5 a5-b5 a5-s4 a5-s5 b1-b2 b1-b3 b1-e1 b1-e2 b2-b4 b2-c2 b2-c4 b2-e1 b3-b5 b3-e2 b3-e3 b4-b5 b4-c4 b4-e3 b5-e3 c1-c2 c1-c3 c1-d1 c1-d2 c1-e1 c2-c4 c2-d1 c2-d3 c2-e1 c3-c5 c3-d2 c3-d4 c3-e1 c3-e2 c4-c5 c4-d3 c4-d5 c4-e3 c5-d4 c5-d5 c5-e2 c5-e3 d1-d2 d1-d3 d1-z2 d2-d4 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 e1-e2 e2-e3 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1",
    ),
    dict(
        family='T5', residue=1, order=31, black='b2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'c1', 'c2', 'e1', 'e2', 'e3'],
        boundary={'a1': 'c1', 'a2': 'c2', 'a3': 'e1', 'a4': 'e2', 'a5': 'e3'},
        odd_witness=('b2', 0), even_witness=('c1', -1), zero_witness=None,
        edges="a1-a2 a1-a3 a1-b1 a1-b2 a1-b3 a1-s1 a1-s2 a2-a4 a2-b2 a2-b4 a2-s1 a2-s3 a3-a5 a3-b3 a3-b5 a3-s2 a3-s4 a4-a5 a4-b4 a4-b5 a4-s3 a4-s5 a5-b5 a5-s4 a5-s5 b1-b2 b1-b3 b1-c1 b1-c2 b1-e1 b2-b4 b2-c2 b2-e2 b3-b5 b3-e1 b3-e3 b4-b5 b4-e2 b4-e3 b5-e3 c1-c2 c1-c3 c1-d1 c1-d2 c1-e1 c2-c4 c2-d1 c2-d3 c2-e2 c3-c5 c3-d2 c3-d4 c3-e1 c3-e4 c4-c5 c4-d3 c4-d5 c4-e2 c4-e4 c5-d4 c5-d5 c5-e4 d1-d2 d1-d3 d1-z2 d2-d4 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 e1-e3 e1-e4 e2-e3 e2-e4 e3-e4 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1",
    ),
    dict(
        family='T5', residue=2, order=32, black='b2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'x1', 'x2', 'x3', 'x4', 'x5'],
        boundary={'a1': 'x1', 'a2': 'x2', 'a3': 'x3', 'a4': 'x4', 'a5': 'x5'},
        odd_witness=('b2', 0), even_witness=('b4', 0), zero_witness=None,
        edges="a1-a2 a1-a3 a1-b1 a1-b2 a1-b3 a1-s1 a1-s2 a2-a4 a2-b2 a2-b4 a2-s1 a2-s3 a3-a5 a3-b3 a3-b5 a3-s2 a3-s4 a4-a5 a4-b4 a4-b5 a4-s3 a4-s5 a5-b5 a5-s4 a5-s5 b1-b2 b1-b3 b1-x1 b1-x2 b1-x3 b2-b4 b2-x2 b2-x4 b3-b5 b3-x3 b3-x5 b4-b5 b4-x4 b4-x5 b5-x5 c1-c2 c1-c3 c1-d1 c1-d2 c1-x1 c2-c4 c2-d1 c2-d3 c2-x1 c2-x2 c3-c5 c3-d2 c3-d4 c3-x1 c3-x3 c4-c5 c4-d3 c4-d5 c4-x2 c4-x4 c5-d4 c5-d5 c5-x3 c5-x4 c5-x5 d1-d2 d1-d3 d1-z2 d2-d4 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1 x1-x2 x1-x3 x2-x4 x3-x5 x4-x5",
    ),
    dict(
        family='T5', residue=3, order=33, black='x1', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'x1', 'x2', 'x3', 'x4', 'x5'],
        boundary={'a1': 'b1', 'a2': 'b2', 'a3': 'b3', 'a4': 'b4', 'a5': 'b5'},
        odd_witness=('x1', 0), even_witness=('b1', -1), zero_witness=None,
        edges="a1-a2 a1-a3 a1-s1 a1-s2 a1-x1 a1-x2 a1-x3 a2-a4 a2-s1 a2-s3 a2-x2 a2-x4 a3-a5 a3-s2 a3-s4 a3-x3 a3-x5 a4-a5 a4-s3 a4-s5 a4-x4 a4-x5 a5-s4 a5-s5 a5-x5 b1-b2 b1-b3 b1-c1 b1-c2 b1-c3 b1-e1 b1-x1 b2-b4 b2-c2 b2-c4 b2-x1 b2-x2 b3-b5 b3-c3 b3-c5 b3-x1 b3-x3 b4-b5 b4-c4 b4-c5 b4-x2 b4-x4 b5-c5 b5-x3 b5-x4 b5-x5 c1-c3 c1-d1 c1-d3 c1-e1 c2-c4 c2-d2 c2-d4 c2-e1 c3-c5 c3-d3 c3-d5 c4-c5 c4-d4 c4-d5 c5-d5 d1-d2 d1-d3 d1-e1 d1-z2 d2-d4 d2-e1 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1 x1-x2 x1-x3 x2-x4 x3-x5 x4-x5",
    ),
    dict(
        family='T5', residue=4, order=34, black='x1', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'x1', 'x2', 'x3', 'x4', 'x5'],
        boundary={'a1': 'b1', 'a2': 'b2', 'a3': 'b3', 'a4': 'b4', 'a5': 'b5'},
        odd_witness=('x1', 0), even_witness=('x4', 0), zero_witness=None,
        edges="a1-a2 a1-a3 a1-s1 a1-s2 a1-x1 a1-x2 a1-x3 a2-a4 a2-s1 a2-s3 a2-x2 a2-x4 a3-a5 a3-s2 a3-s4 a3-x3 a3-x5 a4-a5 a4-s3 a4-s5 a4-x4 a4-x5 a5-s4 a5-s5 a5-x5 b1-b2 b1-b3 b1-c1 b1-c2 b1-c3 b1-x1 b2-b4 b2-c2 b2-c4 b2-x1 b2-x2 b3-b5 b3-c3 b3-c5 b3-x1 b3-x3 b4-b5 b4-c4 b4-c5 b4-x2 b4-x4 b5-c5 b5-x3 b5-x4 b5-x5 c1-c2 c1-c3 c1-d1 c1-d2 c1-e1 c2-c4 c2-d2 c2-d4 c3-c5 c3-e1 c3-e3 c4-c5 c4-d4 c4-d5 c4-e3 c5-e3 d1-d2 d1-d3 d1-e1 d1-z2 d2-d4 d2-z2 d3-d5 d3-e1 d3-e3 d3-z2 d4-d5 d4-z2 d5-e3 d5-z2 e1-e3 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1 x1-x2 x1-x3 x2-x4 x3-x5 x4-x5",
    ),
    dict(
        family='T5', residue=5, order=35, black='x2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'x1', 'x2', 'x3', 'x4', 'x5'],
        boundary={'a1': 'b1', 'a2': 'b2', 'a3': 'b3', 'a4': 'b4', 'a5': 'b5'},
        odd_witness=('x2', 0), even_witness=('x4', 0), zero_witness=None,
        edges="a1-a2 a1-a3 a1-s1 a1-s2 a1-x1 a1-x3 a2-a4 a2-s1 a2-s3 a2-x1 a2-x2 a2-x4 a3-a5 a3-s2 a3-s4 a3-x3 a3-x5 a4-a5 a4-s3 a4-s5 a4-x4 a4-x5 a5-s4 a5-s5 a5-x5 b1-b2 b1-b3 b1-e1 b1-e2 b1-x1 b1-x2 b2-b4 b2-c2 b2-c4 b2-e1 b2-x2 b3-b5 b3-e2 b3-e3 b3-x1 b3-x3 b4-b5 b4-c4 b4-e3 b4-x2 b4-x4 b5-e3 b5-x3 b5-x4 b5-x5 c1-c2 c1-c3 c1-d1 c1-d2 c1-e1 c2-c4 c2-d1 c2-d3 c2-e1 c3-c5 c3-d2 c3-d4 c3-e1 c3-e2 c4-c5 c4-d3 c4-d5 c4-e3 c5-d4 c5-d5 c5-e2 c5-e3 d1-d2 d1-d3 d1-z2 d2-d4 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 e1-e2 e2-e3 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1 x1-x2 x1-x3 x2-x4 x3-x5 x4-x5",
    ),
    dict(
        family='T5', residue=6, order=36, black='b2', copies_per_period=1,
        block=['b1', 'b2', 'b3', 'b4', 'b5', 'x1', 'x2', 'x3', 'x4', 'x5'],
        boundary={'a1': 'b1', 'a2': 'b2', 'a3': 'b3', 'a4': 'b4', 'a5': 'b5'},
        odd_witness=('b2', 0), even_witness=('x2', 0), zero_witness=None,
        edges="a1-a2 a1-a3 a1-s1 a1-s2 a1-x1 a1-x2 a1-x3 a2-a4 a2-s1 a2-s3 a2-x2 a2-x4 a3-a5 a3-s2 a3-s4 a3-x3 a3-x5 a4-a5 a4-s3 a4-s5 a4-x4 a4-x5 a5-s4 a5-s5 a5-x5 b1-b2 b1-b3 b1-c1 b1-c2 b1-e1 b1-x1 b2-b4 b2-c2 b2-e2 b2-x1 b2-x2 b3-b5 b3-e1 b3-e3 b3-x1 b3-x3 b4-b5 b4-e2 b4-e3 b4-x2 b4-x4 b5-e3 b5-x3 b5-x4 b5-x5 c1-c2 c1-c3 c1-d1 c1-d2 c1-e1 c2-c4 c2-d1 c2-d3 c2-e2 c3-c5 c3-d2 c3-d4 c3-e1 c3-e4 c4-c5 c4-d3 c4-d5 c4-e2 c4-e4 c5-d4 c5-d5 c5-e4 d1-d2 d1-d3 d1-z2 d2-d4 d2-z2 d3-d5 d3-z2 d4-d5 d4-z2 d5-z2 e1-e3 e1-e4 e2-e3 e2-e4 e3-e4 s1-s2 s1-s3 s1-z1 s2-s4 s2-z1 s3-s5 s3-z1 s4-s5 s4-z1 s5-z1 x1-x2 x1-x3 x2-x4 x3-x5 x4-x5",
    ),
    dict(
        family='Q', residue=0, order=16, black='b5', copies_per_period=1,
        block=['a4', 'a5', 'b4', 'b5'],
        boundary={'a2': 'a4', 'a3': 'a5', 'b3': 'b5'},
        odd_witness=('b5', 0), even_witness=('b4', 0), zero_witness='a3',
        edges="a1-a2 a1-b1 a1-b3 a2-a3 a2-b2 a2-b4 a3-a4 a3-b3 a3-b5 a4-a5 a4-b4 a4-b6 a5-a6 a5-b5 a5-b7 a6-a7 a6-b6 a6-b8 a7-a8 a7-b7 a8-b8 b1-b2 b2-b3 b3-b4 b4-b5 b5-b6 b6-b7 b7-b8",
    ),
    dict(
        family='Q', residue=1, order=17, black='b5', copies_per_period=1,
        block=['a4', 'a5', 'b4', 'b5'],
        boundary={'a2': 'a4', 'a3': 'a5', 'b3': 'b5'},
        odd_witness=('b5', 0), even_witness=('b4', 0), zero_witness='a3',
        edges="a1-a2 a1-b1 a1-b3 a2-a3 a2-b2 a2-b4 a3-a4 a3-b3 a3-b5 a4-a5 a4-b4 a4-b6 a5-a6 a5-b5 a5-b7 a6-a7 a6-b6 a6-b8 a7-a8 a7-b7 a7-b9 a8-b8 b1-b2 b2-b3 b3-b4 b4-b5 b5-b6 b6-b7 b7-b8 b8-b9",
    ),
    dict(
        family='Q', residue=2, order=18, black='b5', copies_per_period=1,
        block=['a4', 'a5', 'b4', 'b5'],
        boundary={'a2': 'a4', 'a3': 'a5', 'b3': 'b5'},
        odd_witness=('b5', 0), even_witness=('b5', 0), zero_witness='a3',
        edges="a1-a2 a1-b1 a1-b3 a2-a3 a2-b2 a2-b4 a3-a4 a3-b3 a3-b5 a4-a5 a4-b4 a4-b6 a5-a6 a5-b5 a5-b7 a6-a7 a6-b6 a6-b8 a7-a8 a7-b7 a7-b9 a8-a9 a8-b8 a9-b9 b1-b2 b2-b3 b3-b4 b4-b5 b5-b6 b6-b7 b7-b8 b8-b9",
    ),
    dict(
        family='Q', residue=3, order=19, black='b6', copies_per_period=1,
        block=['a4', 'a5', 'b4', 'b5'],
        boundary={'a2': 'a4', 'a3': 'a5', 'b3': 'b5'},
        odd_witness=('a5', 0), even_witness=('a4', 0), zero_witness='a6',
        edges="a1-a2 a1-b1 a1-b3 a2-a3 a2-b2 a2-b4 a3-a4 a3-b3 a3-b5 a4-a5 a4-b4 a4-b6 a5-a6 a5-b5 a5-b7 a6-a7 a6-b6 a6-b8 a7-a8 a7-b7 a7-b9 a8-a9 a8-b10 a8-b8 a9-b9 b1-b2 b10-b9 b2-b3 b3-b4 b4-b5 b5-b6 b6-b7 b7-b8 b8-b9",
    ),
    dict(
        family='Q3', residue=2, order=26, black='b3', copies_per_period=1,
        block=['a2', 'a3', 'b2', 'b3', 'c2', 'c3'],
        boundary={'b1': 'b3', 'c1': 'c3', 'd4': 'a3'},
        odd_witness=('b3', 0), even_witness=('b3', -1), zero_witness='a4',
        edges="a2-a3 a2-b2 a2-c1 a2-d4 a3-a4 a3-b3 a3-c2 a4-b4 a4-c3 a4-e1 b1-b2 b1-c1 b1-d4 b1-d6 b2-b3 b2-c2 b3-b4 b3-c3 b4-e3 b4-e5 c1-c2 c1-d8 c2-c3 c3-e5 d1-d2 d1-d3 d1-d5 d2-d4 d2-d6 d3-d4 d3-d7 d4-d8 d5-d6 d5-d7 d6-d8 d7-d8 e1-e2 e1-e3 e1-e5 e2-e4 e2-e6 e3-e4 e3-e7 e4-e8 e5-e6 e5-e7 e6-e8 e7-e8",
    ),
    dict(
        family='Q3', residue=3, order=27, black='c2', copies_per_period=1,
        block=['a2', 'a3', 'b2', 'b3', 'c2', 'c3'],
        boundary={'a1': 'a3', 'b1': 'b3', 'c1': 'c3'},
        odd_witness=('c2', 0), even_witness=('c3', -1), zero_witness='c1',
        edges="a1-a2 a1-b1 a1-d2 a1-d8 a2-a3 a2-b2 a2-c1 a3-a4 a3-b3 a3-c2 a4-b4 a4-c3 a4-e1 b1-b2 b1-c1 b1-d4 b2-b3 b2-c2 b3-b4 b3-c3 b4-e3 b4-e5 c1-c2 c1-d8 c2-c3 c3-e5 d1-d2 d1-d3 d1-d5 d2-d4 d2-d6 d3-d4 d3-d7 d4-d8 d5-d6 d5-d7 d6-d8 d7-d8 e1-e2 e1-e3 e1-e5 e2-e4 e2-e6 e3-e4 e3-e7 e4-e8 e5-e6 e5-e7 e6-e8 e7-e8",
    ),
    dict(
        family='Q3', residue=4, order=28, black='c3', copies_per_period=1,
        block=['a2', 'a3', 'b2', 'b3', 'c3', 'c4'],
        boundary={'a1': 'a3', 'b1': 'b3', 'c2': 'c4'},
        odd_witness=('c3', 0), even_witness=('b3', -1), zero_witness='b1',
        edges="a1-a2 a1-b1 a1-c1 a1-d2 a2-a3 a2-b2 a2-c2 a3-a4 a3-b3 a3-c3 a4-b4 a4-c4 a4-e1 b1-b2 b1-c2 b1-d4 b2-b3 b2-c3 b3-b4 b3-c4 b4-e3 b4-e5 c1-c2 c1-d4 c1-d6 c2-c3 c3-c4 c4-e5 d1-d2 d1-d3 d1-d5 d2-d4 d2-d6 d3-d4 d3-d7 d4-d8 d5-d6 d5-d7 d6-d8 d7-d8 e1-e2 e1-e3 e1-e5 e2-e4 e2-e6 e3-e4 e3-e7 e4-e8 e5-e6 e5-e7 e6-e8 e7-e8",
    ),
    dict(
        family='Q3', residue=5, order=29, black='b3', copies_per_period=1,
        block=['a2', 'a3', 'b2', 'b3', 'c2', 'c3'],
        boundary={'b1': 'b3', 'c1': 'c3', 'd4': 'a3'},
        odd_witness=('b3', 0), even_witness=('b2', 0), zero_witness='b5',
        edges="a2-a3 a2-b2 a2-c1 a2-d4 a3-a5 a3-b3 a3-c2 a4-a5 a4-b4 a4-c4 a4-e1 a5-b5 a5-c3 b1-b2 b1-c1 b1-d4 b1-d6 b2-b3 b2-c2 b3-b5 b3-c3 b4-b5 b4-e3 b4-e5 b5-c4 c1-c2 c1-d8 c2-c3 c3-c4 c4-e5 d1-d2 d1-d3 d1-d5 d2-d4 d2-d6 d3-d4 d3-d7 d4-d8 d5-d6 d5-d7 d6-d8 d7-d8 e1-e2 e1-e3 e1-e5 e2-e4 e2-e6 e3-e4 e3-e7 e4-e8 e5-e6 e5-e7 e6-e8 e7-e8",
    ),
    dict(
        family='Q3', residue=0, order=30, black='c4', copies_per_period=1,
        block=['a2', 'a3', 'b2', 'b3', 'c2', 'c4'],
        boundary={'a1': 'a3', 'b1': 'b3', 'c1': 'c4'},
        odd_witness=('c4', 0), even_witness=('c4', -1), zero_witness='c1',
        edges="a1-a2 a1-b1 a1-d2 a1-d8 a2-a3 a2-b2 a2-c1 a3-a5 a3-b3 a3-c2 a4-a5 a4-b4 a4-c3 a4-e1 a5-b5 a5-c4 b1-b2 b1-c1 b1-d4 b2-b3 b2-c2 b3-b5 b3-c4 b4-b5 b4-e3 b4-e5 b5-c3 c1-c2 c1-d8 c2-c4 c3-c4 c3-e5 d1-d2 d1-d3 d1-d5 d2-d4 d2-d6 d3-d4 d3-d7 d4-d8 d5-d6 d5-d7 d6-d8 d7-d8 e1-e2 e1-e3 e1-e5 e2-e4 e2-e6 e3-e4 e3-e7 e4-e8 e5-e6 e5-e7 e6-e8 e7-e8",
    ),
    dict(
        family='Q3', residue=1, order=31, black='c3', copies_per_period=1,
        block=['a2', 'a3', 'b2', 'b3', 'c2', 'c3'],
        boundary={'a1': 'a3', 'b1': 'b3', 'c1': 'c3'},
        odd_witness=('c3', 0), even_witness=('b2', 0), zero_witness='b5',
        edges="a1-a2 a1-b1 a1-c1 a1-d2 a2-a3 a2-b2 a2-c2 a3-a5 a3-b3 a3-c3 a4-a5 a4-b4 a4-c4 a4-e1 a5-b5 a5-c5 b1-b2 b1-c2 b1-d4 b2-b3 b2-c3 b3-b5 b3-c5 b4-b5 b4-e3 b4-e5 b5-c4 c1-c2 c1-d4 c1-d6 c2-c3 c3-c5 c4-c5 c4-e5 d1-d2 d1-d3 d1-d5 d2-d4 d2-d6 d3-d4 d3-d7 d4-d8 d5-d6 d5-d7 d6-d8 d7-d8 e1-e2 e1-e3 e1-e5 e2-e4 e2-e6 e3-e4 e3-e7 e4-e8 e5-e6 e5-e7 e6-e8 e7-e8",
    ),
]

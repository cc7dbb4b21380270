"""
Immutable integer matrices.

Entries are Python integers, so arithmetic is exact at any size. Rows are
stored sparsely because the coboundary matrices of the bar complex have at
most a few nonzero entries per row.
"""


class IntMatrix:
    """
    An immutable rows x cols matrix of arbitrary-precision integers.

    Vectors are plain tuples; `m.apply(v)` is the matrix-vector product m·v.
    """
    __slots__ = ('rows', 'cols', '_data', '_hash')

    def __init__(self, rows, cols, sparse_rows):
        rows = int(rows)
        cols = int(cols)
        if rows < 0 or cols < 0:
            raise ValueError('matrix dimensions must be non-negative')
        data = []
        for entries in sparse_rows:
            items = entries.items() if isinstance(entries, dict) else entries
            row = tuple(sorted((int(j), int(v)) for j, v in items if v))
            for j, _ in row:
                if not 0 <= j < cols:
                    raise ValueError(f'column index {j} outside 0..{cols - 1}')
            data.append(row)
        if len(data) != rows:
            raise ValueError(f'expected {rows} rows, got {len(data)}')
        self.rows = rows
        self.cols = cols
        self._data = tuple(data)
        self._hash = None

    # Constructors

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError(f'ragged matrix: expected rows of length {cols}, got {len(row)}')
        return cls(len(rows), cols, ({j: v for j, v in enumerate(row) if v} for row in rows))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(int(x) for x in column) for column in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        data = [dict() for _ in range(rows)]
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValueError(f'ragged matrix: expected columns of length {rows}, got {len(column)}')
            for i, v in enumerate(column):
                if v:
                    data[i][j] = v
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [()] * rows)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [((i, 1),) for i in range(n)])

    @classmethod
    def diagonal(cls, values, rows=None, cols=None):
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [dict() for _ in range(rows)]
        for i, v in enumerate(values):
            if v:
                data[i][i] = v
        return cls(rows, cols, data)

    @classmethod
    def block_diagonal(cls, blocks):
        blocks = list(blocks)
        data = []
        offset = 0
        for block in blocks:
            for row in block._data:
                data.append(tuple((j + offset, v) for j, v in row))
            offset += block.cols
        return cls(sum(b.rows for b in blocks), offset, data)

    @classmethod
    def hstack(cls, blocks, rows=None):
        blocks = list(blocks)
        if rows is None:
            rows = blocks[0].rows if blocks else 0
        data = [[] for _ in range(rows)]
        offset = 0
        for block in blocks:
            if block.rows != rows:
                raise ValueError('hstack needs matrices with equal row counts')
            for i, row in enumerate(block._data):
                data[i].extend((j + offset, v) for j, v in row)
            offset += block.cols
        return cls(rows, offset, data)

    @classmethod
    def vstack(cls, blocks, cols=None):
        blocks = list(blocks)
        if cols is None:
            cols = blocks[0].cols if blocks else 0
        data = []
        for block in blocks:
            if block.cols != cols:
                raise ValueError('vstack needs matrices with equal column counts')
            data.extend(block._data)
        return cls(len(data), cols, data)

    # Access

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        """Row-major tuple of all entries."""
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
        return tuple(out)

    def __getitem__(self, index):
        i, j = index
        for col, v in self._data[i]:
            if col == j:
                return v
        return 0

    def row(self, i):
        dense = [0] * self.cols
        for j, v in self._data[i]:
            dense[j] = v
        return tuple(dense)

    def sparse_row(self, i):
        return self._data[i]

    def sparse_rows(self):
        return self._data

    def column(self, j):
        return tuple(self[i, j] for i in range(self.rows))

    def columns(self):
        dense = [[0] * self.rows for _ in range(self.cols)]
        for i, row in enumerate(self._data):
            for j, v in row:
                dense[j][i] = v
        return [tuple(c) for c in dense]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def nonzero_count(self):
        return sum(len(row) for row in self._data)

    def is_zero(self):
        return all(not row for row in self._data)

    def is_square(self):
        return self.rows == self.cols

    # Arithmetic

    def transpose(self):
        data = [dict() for _ in range(self.cols)]
        for i, row in enumerate(self._data):
            for j, v in row:
                data[j][i] = v
        return IntMatrix(self.cols, self.rows, data)

    def apply(self, vector):
        vector = tuple(vector)
        if len(vector) != self.cols:
            raise ValueError(f'vector of length {len(vector)} does not fit a {self.rows}x{self.cols} matrix')
        return tuple(sum(v * vector[j] for j, v in row) for row in self._data)

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f'cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        data = []
        for row in self._data:
            acc = {}
            for k, a in row:
                for j, b in other._data[k]:
                    acc[j] = acc.get(j, 0) + a * b
            data.append(acc)
        return IntMatrix(self.rows, other.cols, data)

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise ValueError('matrix shapes differ')
        data = []
        for left, right in zip(self._data, other._data):
            acc = dict(left)
            for j, v in right:
                acc[j] = acc.get(j, 0) + sign * v
            data.append(acc)
        return IntMatrix(self.rows, self.cols, data)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k):
        return IntMatrix(self.rows, self.cols, (((j, k * v) for j, v in row) for row in self._data))

    # Comparison

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return f'IntMatrix({self.to_lists()})'
        return f'IntMatrix(<{self.rows}x{self.cols}, {self.nonzero_count()} nonzero>)'

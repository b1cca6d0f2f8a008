# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``_kernel_py``."""
from libc.stdlib cimport malloc, calloc, free


cdef int* _ints(seq, Py_ssize_t n) except NULL:
    cdef int* buf = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    return buf


cdef class _Csr:
    cdef int n, m
    cdef int* out_ptr
    cdef int* out_arc
    cdef int* head
    cdef int* mate
    cdef int* arc_ok
    cdef int* node_ok

    def __cinit__(self, out_ptr, out_arc, head, mate, arc_ok, node_ok):
        self.n = len(out_ptr) - 1
        self.m = len(head)
        self.out_ptr = _ints(out_ptr, self.n + 1)
        self.out_arc = _ints(out_arc, len(out_arc))
        self.head = _ints(head, self.m)
        self.mate = _ints(mate, self.m)
        self.arc_ok = _ints(arc_ok, self.m)
        self.node_ok = _ints(node_ok, self.n)

    def __dealloc__(self):
        free(self.out_ptr)
        free(self.out_arc)
        free(self.head)
        free(self.mate)
        free(self.arc_ok)
        free(self.node_ok)


cdef long _search(_Csr g, int s, int t, long budget, char* reached, int todo, int* path, int* path_len):
    # t >= 0: stop at t, path holds the arcs; t < 0: mark every reachable node
    cdef int n = g.n
    cdef char* on_path = <char*> calloc(n if n > 0 else 1, 1)
    cdef char* used = <char*> calloc(g.m if g.m > 0 else 1, 1)
    cdef int* st_node = <int*> malloc((n + 1) * sizeof(int))
    cdef int* st_pos = <int*> malloc((n + 1) * sizeof(int))
    cdef int depth = 0, v, i, end, a, w, advanced
    cdef long pushes = 0
    cdef long result = 0
    on_path[s] = 1
    st_node[0] = s
    st_pos[0] = g.out_ptr[s]
    depth = 1
    path_len[0] = 0
    while depth > 0:
        v = st_node[depth - 1]
        i = st_pos[depth - 1]
        end = g.out_ptr[v + 1]
        advanced = 0
        while i < end:
            a = g.out_arc[i]
            i += 1
            w = g.head[a]
            if not g.arc_ok[a] or not g.node_ok[w] or on_path[w] or used[g.mate[a]]:
                continue
            st_pos[depth - 1] = i
            if t >= 0:
                path[path_len[0]] = a
                path_len[0] += 1
                if w == t:
                    result = 1
                    break
            else:
                if not reached[w]:
                    reached[w] = 1
                    todo -= 1
                    if todo == 0:
                        result = 1
                        break
                path[path_len[0]] = a
                path_len[0] += 1
            pushes += 1
            if budget and pushes > budget:
                result = -1
                break
            used[a] = 1
            on_path[w] = 1
            st_node[depth] = w
            st_pos[depth] = g.out_ptr[w]
            depth += 1
            advanced = 1
            break
        if result != 0:
            break
        if not advanced:
            depth -= 1
            on_path[v] = 0
            if path_len[0] > 0:
                path_len[0] -= 1
                used[path[path_len[0]]] = 0
    free(on_path)
    free(used)
    free(st_node)
    free(st_pos)
    return result


def regular_path(out_ptr, out_arc, head, mate, arc_ok, node_ok, int s, int t, long budget):
    if s == t:
        return []
    cdef _Csr g = _Csr(out_ptr, out_arc, head, mate, arc_ok, node_ok)
    cdef int* path = <int*> malloc((g.n + 1) * sizeof(int))
    cdef int plen = 0
    cdef long r
    try:
        r = _search(g, s, t, budget, NULL, 0, path, &plen)
        if r == -1:
            return -1
        if r == 0:
            return None
        return [path[i] for i in range(plen)]
    finally:
        free(path)


def regular_reach(out_ptr, out_arc, head, mate, arc_ok, node_ok, int s, long budget):
    cdef _Csr g = _Csr(out_ptr, out_arc, head, mate, arc_ok, node_ok)
    cdef char* reached = <char*> calloc(g.n if g.n > 0 else 1, 1)
    cdef int* path = <int*> malloc((g.n + 1) * sizeof(int))
    cdef int plen = 0, todo = 0, v
    cdef long r
    try:
        reached[s] = 1
        for v in range(g.n):
            if g.node_ok[v]:
                todo += 1
        todo -= 1
        if todo > 0:
            r = _search(g, s, -1, budget, reached, todo, path, &plen)
            if r == -1:
                return -1
        return [int(reached[v]) for v in range(g.n)]
    finally:
        free(reached)
        free(path)

"""Pure-Python search kernels (fallback for the compiled ``_kernel`` extension).

Graphs arrive in CSR form: ``out_ptr[v]:out_ptr[v+1]`` slices ``out_arc``
(arc ids in increasing order), ``head[a]`` and ``mate[a]`` per arc.  ``arc_ok``
and ``node_ok`` are 0/1 masks restricting the search.

Only node-simple paths are explored.  That loses nothing: deleting a closed
sub-walk from a regular walk leaves a regular walk with the same ends.
"""
from __future__ import annotations


def regular_path(out_ptr, out_arc, head, mate, arc_ok, node_ok, s, t, budget):
    """Lexicographically first node-simple regular ``s``–``t`` path, as a list of arc ids.

    Returns None when no path exists.  ``budget`` caps the number of arc
    pushes (0 = unlimited); exceeding it returns -1.
    """
    if s == t:
        return []
    n = len(out_ptr) - 1
    on_path = [False] * n
    used = [False] * len(head)
    on_path[s] = True
    stack_node = [s]
    stack_pos = [out_ptr[s]]
    path: list[int] = []
    pushes = 0
    while stack_node:
        v = stack_node[-1]
        i = stack_pos[-1]
        end = out_ptr[v + 1]
        advanced = False
        while i < end:
            a = out_arc[i]
            i += 1
            w = head[a]
            if not arc_ok[a] or not node_ok[w] or on_path[w] or used[mate[a]]:
                continue
            stack_pos[-1] = i
            path.append(a)
            if w == t:
                return path
            pushes += 1
            if budget and pushes > budget:
                return -1
            used[a] = True
            on_path[w] = True
            stack_node.append(w)
            stack_pos.append(out_ptr[w])
            advanced = True
            break
        if not advanced:
            stack_node.pop()
            stack_pos.pop()
            on_path[v] = False
            if path:
                used[path.pop()] = False
    return None


def regular_reach(out_ptr, out_arc, head, mate, arc_ok, node_ok, s, budget):
    """0/1 list: which nodes are ends of some regular path from ``s``.

    Returns -1 when ``budget`` (arc pushes, 0 = unlimited) is exceeded.
    """
    n = len(out_ptr) - 1
    reached = [0] * n
    reached[s] = 1
    todo = sum(1 for v in range(n) if node_ok[v]) - 1
    if todo <= 0:
        return reached
    on_path = [False] * n
    used = [False] * len(head)
    on_path[s] = True
    stack_node = [s]
    stack_pos = [out_ptr[s]]
    path: list[int] = []
    pushes = 0
    while stack_node:
        v = stack_node[-1]
        i = stack_pos[-1]
        end = out_ptr[v + 1]
        advanced = False
        while i < end:
            a = out_arc[i]
            i += 1
            w = head[a]
            if not arc_ok[a] or not node_ok[w] or on_path[w] or used[mate[a]]:
                continue
            stack_pos[-1] = i
            if not reached[w]:
                reached[w] = 1
                todo -= 1
                if todo == 0:
                    return reached
            pushes += 1
            if budget and pushes > budget:
                return -1
            path.append(a)
            used[a] = True
            on_path[w] = True
            stack_node.append(w)
            stack_pos.append(out_ptr[w])
            advanced = True
            break
        if not advanced:
            stack_node.pop()
            stack_pos.pop()
            on_path[v] = False
            if path:
                used[path.pop()] = False
    return reached

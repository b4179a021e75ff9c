class Node:
    __slots__ = ('next', 'previous', 'key', 'value')

    def __init__(self, next, previous, key, value):
        self.next, self.previous, self.key, self.value = next, previous, key, value


class LinkedHashTable:
    """
    Hash table whose keys are threaded on a doubly linked list, so it reads like a
    queue that also supports O(1) lookup and O(1) removal from the middle. The
    ansatz solver keeps its pending candidate graphs here keyed by canonical
    encoding: candidates are served from the front, deferred ones go to the back
    and consumed ones are removed wherever they sit.
    In O(1) it supports:
        - Membership tests (by key)
        - Adding to the back
        - Popping from the front
        - Removing arbitrary keys
    """

    def __init__(self):
        self._first, self._last = None, None
        self._table = dict()

    def __contains__(self, key):
        return key in self._table

    def __len__(self):
        return len(self._table)

    def append(self, key, value):
        assert key not in self._table, "Key {} is already queued".format(key)

        node = Node(next=None, previous=self._last, key=key, value=value)
        self._table[key] = node

        if self._last:
            self._last.next = node
        self._last = node

        if not self._first:
            self._first = node

    def pop_front(self):
        if not self._first:
            return None, None
        return self._unlink(self._first)

    def remove(self, key):
        node = self._table.get(key)
        if node is None:
            return None
        return self._unlink(node)[1]

    def _unlink(self, node):
        if node.previous:
            node.previous.next = node.next
        else:
            assert node is self._first, "Node for {} has no predecessor but is not first".format(node.key)
            self._first = node.next

        if node.next:
            node.next.previous = node.previous
        else:
            assert node is self._last, "Node for {} has no successor but is not last".format(node.key)
            self._last = node.previous

        node.next = node.previous = None
        self._table.pop(node.key)
        return node.key, node.value

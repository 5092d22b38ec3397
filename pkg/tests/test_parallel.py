from superpop.parallel import map_partitions, partition, resolve_workers


def _total(chunk):
    return sum(chunk)


def test_partition_is_contiguous_and_ordered():
    chunks = partition(list(range(10)), 3)
    assert chunks == [[0, 1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert partition([1, 2], 8) == [[1], [2]]


def test_map_partitions_keeps_order():
    chunks = partition(list(range(100)), 7)
    assert map_partitions(_total, chunks, workers=1) == map_partitions(_total, chunks, workers=3)


def test_resolve_workers():
    assert resolve_workers(4) == 4
    assert resolve_workers(0) >= 1

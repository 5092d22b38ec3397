"""
Shared keyword index (Aho-Corasick automaton) over a set of strings.

Keywords are inserted in lexicographic order, so the keywords below any trie
node form a contiguous rank interval ``span[node] = (lo, hi)``. Two queries are
built on that:

* all-pairs suffix/prefix overlaps: the state reached after reading u, followed
  down its failure chain, enumerates every suffix of u that is a prefix of some
  keyword, longest first;
* multi-pattern search: every keyword occurring in a text.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, Iterator, List, Sequence, Set, Tuple

ROOT = 0


class KeywordIndex:

    def __init__(self, keywords: Sequence[str]):
        self.keywords = list(keywords)
        # rank -> keyword id
        self.order: List[int] = sorted(range(len(self.keywords)), key=self.keywords.__getitem__)
        self.goto: List[Dict[str, int]] = [{}]
        self.fail: List[int] = [ROOT]
        self.depth: List[int] = [0]
        self.span: List[Tuple[int, int]] = [(0, len(self.keywords))]
        self.terminal: List[List[int]] = [[]]
        # nearest proper suffix state that ends a keyword, -1 if none
        self.dict_link: List[int] = [-1]
        self._build()

    def __len__(self) -> int:
        return len(self.keywords)

    @property
    def n_states(self) -> int:
        return len(self.goto)

    def _new_state(self, depth: int, rank: int) -> int:
        self.goto.append({})
        self.fail.append(ROOT)
        self.depth.append(depth)
        self.span.append((rank, rank + 1))
        self.terminal.append([])
        self.dict_link.append(-1)
        return len(self.goto) - 1

    def _build(self) -> None:
        for rank, kid in enumerate(self.order):
            state = ROOT
            for d, ch in enumerate(self.keywords[kid], start=1):
                nxt = self.goto[state].get(ch)
                if nxt is None:
                    nxt = self._new_state(d, rank)
                    self.goto[state][ch] = nxt
                else:
                    lo, _ = self.span[nxt]
                    self.span[nxt] = (lo, rank + 1)
                state = nxt
            self.terminal[state].append(kid)

        queue = deque(self.goto[ROOT].values())
        while queue:
            u = queue.popleft()
            for ch, v in self.goto[u].items():
                queue.append(v)
                f = self.fail[u]
                while f and ch not in self.goto[f]:
                    f = self.fail[f]
                self.fail[v] = self.goto[f].get(ch, ROOT)
                link = self.fail[v]
                self.dict_link[v] = link if self.terminal[link] else self.dict_link[link]

    def step(self, state: int, ch: str) -> int:
        while state and ch not in self.goto[state]:
            state = self.fail[state]
        return self.goto[state].get(ch, ROOT)

    def state_after(self, text: str) -> int:
        state = ROOT
        for ch in text:
            state = self.step(state, ch)
        return state

    def suffix_states(self, state: int) -> Iterator[int]:
        """The state and its failure chain, deepest first, root excluded."""
        while state != ROOT:
            yield state
            state = self.fail[state]

    def find_all(self, text: str) -> Set[int]:
        """Ids of all keywords occurring somewhere in text."""
        found: Set[int] = set()
        state = ROOT
        for ch in text:
            state = self.step(state, ch)
            s = state if self.terminal[state] else self.dict_link[state]
            while s > 0:
                found.update(self.terminal[s])
                s = self.dict_link[s]
        return found

#!/usr/bin/env python3
"""JSON storage for catalogues of canonical matroid classes."""

import json
import os
from datetime import datetime
from typing import Dict, List, Optional, Sequence

from canonical import CanonicalKey


class CatalogueStore:
    """Manages storage and retrieval of class catalogues by family and size."""

    def __init__(self, data_file: str = 'matroid_catalogue.json'):
        """Initialize the store."""
        self.data_file = data_file
        self.data = self._load_data()

    @staticmethod
    def _empty() -> Dict:
        return {'families': {}, 'generated': {}}

    def _load_data(self) -> Dict:
        """Load data from JSON file."""
        if os.path.exists(self.data_file):
            try:
                with open(self.data_file, 'r') as f:
                    data = json.load(f)
                if not isinstance(data, dict) or 'families' not in data:
                    print(f"Warning: {self.data_file} is not a class catalogue, starting empty")
                    return self._empty()
                data.setdefault('generated', {})
                return data
            except (json.JSONDecodeError, IOError) as e:
                print(f"Warning: Could not load {self.data_file}: {e}")
                return self._empty()
        return self._empty()

    def _save_data(self):
        """Save data to JSON file."""
        try:
            with open(self.data_file, 'w') as f:
                json.dump(self.data, f, indent=2)
        except IOError as e:
            print(f"Error saving data to {self.data_file}: {e}")

    def record_classes(self, family: str, n: int, keys: Sequence[CanonicalKey]) -> bool:
        """
        Record the catalogue of a family at one size.

        Args:
            family: Family name (e.g. 'all')
            n: Ground-set size
            keys: Canonical keys of every class

        Returns:
            True if the stored catalogue changed, False if it was already recorded
        """
        tables = [list(key.ranks) for key in sorted(keys)]
        by_size = self.data['families'].setdefault(family, {})
        if by_size.get(str(n)) == tables:
            return False
        by_size[str(n)] = tables
        self.data['generated'].setdefault(family, {})[str(n)] = datetime.now().isoformat()
        self._save_data()
        return True

    def get_classes(self, family: str, n: int) -> Optional[List[CanonicalKey]]:
        """
        Get the stored catalogue of a family at one size.

        Returns:
            List of keys, or None if nothing is recorded
        """
        tables = self.data['families'].get(family, {}).get(str(n))
        if tables is None:
            return None
        return [CanonicalKey(n, bytes(t)) for t in tables]

    def has_classes(self, family: str, n: int) -> bool:
        return str(n) in self.data['families'].get(family, {})

    def families(self) -> List[str]:
        return sorted(self.data['families'])

    def generated_at(self, family: str, n: int) -> Optional[str]:
        return self.data['generated'].get(family, {}).get(str(n))

from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class Cache(Protocol):
    def add_entry(self, key: Any, value: Any, *, override: bool = False) -> None:
        """
        Adds an entry to the cache, evicting the least recently
        used entry when the cache is full.

        Parameters
        ----------
        key: Any
            The key to store this value under
        value: Any
            The value for the given key
        override: bool, optional
            If True, overrides an entry if it already exists

        Raises
        ------
        ExistingEntry
        """
        raise NotImplementedError

    def delete_entry(self, key: Any) -> None:
        """
        Deletes an entry in the cache.

        Notes
        -----
        Deleting a missing key is not an error.
        """
        raise NotImplementedError

    def __contains__(self, item: Any) -> bool:
        raise NotImplementedError

    def force_clean(self) -> None:
        """Drops least recently used entries until the size cap holds."""
        raise NotImplementedError

    def get_entry(self, key: Any) -> Any:
        """
        Parameters
        ----------
        key: Any
            The key to get an entry for

        Returns
        -------
        Any
            The value stored under this key

        Raises
        ------
        NonExistentEntry
        """
        raise NotImplementedError

from leafspan.cache.entry import Entry
from leafspan.cache.bounded import BoundedCache

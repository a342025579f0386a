from itertools import chain
from concurrent.futures import ThreadPoolExecutor

from mulinl.utils.config import MULINL_THREADS


def chunks_from(elements, chunk_by=None):
    length = chunk_by if chunk_by else len(elements)
    for index in range(0, len(elements), length):
        yield elements[index:index + length]


def zipped_async_map(func,
                     args_list=None,
                     kwargs_list=None,
                     chunk_by=None,
                     executor_class=None,
                     max_workers=None):

    if max_workers is None:
        max_workers = MULINL_THREADS

    if args_list is None and kwargs_list is None:
        raise ValueError('one args_list or kwargs_list need to be specified.')

    listed_args_list = list(args_list) if args_list is not None else None
    listed_kwargs_list = list(kwargs_list) if kwargs_list is not None else None
    if listed_args_list is not None and listed_kwargs_list is not None \
       and len(listed_args_list) != len(listed_kwargs_list):
        raise ValueError('args_list and kwargs_list must have the same length.')
    if listed_args_list is None:
        listed_args_list = [()] * len(listed_kwargs_list)
    if listed_kwargs_list is None:
        listed_kwargs_list = [{}] * len(listed_args_list)
    if not listed_args_list:
        return iter([])

    def asynchronous_func(args_and_kwargs):
        return func(*args_and_kwargs[0], **args_and_kwargs[1])

    zipped = list(zip(listed_args_list, listed_kwargs_list))

    if max_workers <= 1:
        return map(asynchronous_func, zipped)

    if executor_class is None:
        executor_class = ThreadPoolExecutor

    results = []
    with executor_class(max_workers=max_workers) as executor:
        for chunk in chunks_from(zipped, chunk_by):
            results = chain(results,
                            list(executor.map(asynchronous_func, chunk)))
    return results


def async_map(func, *lists, **kwargs):
    return zipped_async_map(func, zip(*lists), **kwargs)

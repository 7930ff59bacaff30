// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_PLACE_OF_WORSHIP_H
#define KNOW_PLACE_OF_WORSHIP_H

#include <stdbool.h>
#include <stddef.h>

/* Place of worship */
#define KNOW_PLACE_OF_WORSHIP_TYPE_IRI "https://know.dev/PlaceOfWorship"

typedef struct PlaceOfWorship {
    const char *id;
} PlaceOfWorship;

#endif /* KNOW_PLACE_OF_WORSHIP_H */

// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_HOTEL_H
#define KNOW_HOTEL_H

#include <stdbool.h>
#include <stddef.h>

/* Hotel */
#define KNOW_HOTEL_TYPE_IRI "https://know.dev/Hotel"

typedef struct Hotel {
    const char *id;
} Hotel;

#endif /* KNOW_HOTEL_H */
